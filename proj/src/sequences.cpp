#include "nurikabe/sequences.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include "json.hpp"
#include <sstream>

namespace nurikabe {

namespace {

struct FormulaInfo {
  Formula formula;
  std::string_view id;
};

constexpr FormulaInfo kFormulas[] = {
    {Formula::rectangle_count, "N_closed"},
    {Formula::jacobsthal, "J_closed"},
    {Formula::last_column_one_water, "Nk1_closed"},
    {Formula::last_column_two_water, "Nk2_closed"},
    {Formula::one_water_recurrence3, "a_rec3"},
    {Formula::one_water_recurrence2, "a_rec2"},
    {Formula::bicolumn_recurrence, "b_rec"},
    {Formula::square_rule, "square_thm"},
    {Formula::loop_mobius, "loop_mobius_thm"},
    {Formula::loop_klein, "loop_klein_thm"},
    {Formula::loop_klein_chain, "loop_klein_lemma_chain"},
    {Formula::loop_mobius_even_closed, "A213387_form"},
    {Formula::loop_mobius_odd_closed, "A123203_form"},
};

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}
std::int64_t pow2(int k) {
  if (k < 0 || k > 62) throw std::overflow_error("2^" + std::to_string(k) + " out of range");
  return std::int64_t{1} << k;
}

// 6*2^k - 3k - 5, defined for k >= 0 (N_0 = 1 is the empty rectangle).
std::int64_t rect_count(int k) { return sub(sub(mul(6, pow2(k)), mul(3, k)), 5); }

std::int64_t jacobsthal(int k) {
  const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
  return sub(pow2(k), sign) / 3;
}

void require_at_least(Formula f, int n, int lo) {
  if (n < lo)
    throw SequenceError(std::string(formula_id(f)) + " is defined for n >= " + std::to_string(lo) + ", got " +
                        std::to_string(n));
}

std::int64_t recurrence3(int k) {
  std::int64_t a[3] = {2, 6, 14};
  if (k <= 3) return a[k - 1];
  for (int i = 4; i <= k; ++i) {
    std::int64_t next = sub(add(mul(2, a[2]), a[1]), mul(2, a[0]));
    a[0] = a[1];
    a[1] = a[2];
    a[2] = next;
  }
  return a[2];
}

std::int64_t recurrence2(int k) {
  std::int64_t prev = 2, cur = 6;
  if (k == 1) return prev;
  for (int i = 3; i <= k; ++i) {
    std::int64_t next = add(add(cur, mul(2, prev)), 4);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t bicolumn(int k) {
  std::int64_t prev = 2, cur = 2;
  if (k == 2) return prev;
  for (int i = 4; i <= k; ++i) {
    std::int64_t next = add(cur, mul(2, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t to_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("count exceeds int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string_view formula_id(Formula f) {
  for (const auto& info : kFormulas)
    if (info.formula == f) return info.id;
  return "?";
}

Formula parse_formula(std::string_view id) {
  for (const auto& info : kFormulas)
    if (info.id == id) return info.formula;
  throw SequenceError("unknown formula '" + std::string(id) + "'");
}

const std::vector<Formula>& all_formulas() {
  static const std::vector<Formula> all = [] {
    std::vector<Formula> v;
    for (const auto& info : kFormulas) v.push_back(info.formula);
    return v;
  }();
  return all;
}

std::int64_t loop_klein_lemma_chain(int n, const EnumerationOptions& options) {
  require_at_least(Formula::loop_klein_chain, n, 2);
  const auto strip = build_mobius(n);
  const auto all = count_valid(strip, Rule::loop, {}, options).count;
  const auto ends_water = count_valid(strip, Rule::loop, {{1, n}, {}}, options).count;
  return sub(to_signed(all), to_signed(ends_water));
}

std::int64_t eval(Formula f, int n, const EnumerationOptions& options) {
  const int k = n / 2;
  const bool even = n % 2 == 0;
  switch (f) {
    case Formula::rectangle_count:
      require_at_least(f, n, 1);
      return rect_count(n);
    case Formula::jacobsthal:
      require_at_least(f, n, 1);
      return jacobsthal(n);
    case Formula::last_column_one_water:
      require_at_least(f, n, 1);
      return sub(pow2(n + 1), 2);
    case Formula::last_column_two_water:
      require_at_least(f, n, 1);
      return sub(pow2(n), 1);
    case Formula::one_water_recurrence3:
      require_at_least(f, n, 1);
      return recurrence3(n);
    case Formula::one_water_recurrence2:
      require_at_least(f, n, 1);
      return recurrence2(n);
    case Formula::bicolumn_recurrence:
      require_at_least(f, n, 2);
      return bicolumn(n);
    case Formula::square_rule:
      require_at_least(f, n, 1);
      return even ? rect_count(k) : sub(add(rect_count(k), mul(3, pow2(k))), 2);
    case Formula::loop_mobius:
      require_at_least(f, n, 1);
      return even ? add(sub(rect_count(k), pow2(k)), 1) : sub(add(rect_count(k), pow2(k + 1)), 1);
    case Formula::loop_klein:
      require_at_least(f, n, 1);
      if (n <= 4) {
        static constexpr std::int64_t kSmall[] = {1, 3, 6, 7};
        return kSmall[n - 1];
      }
      if (even) return add(sub(add(rect_count(k), mul(2, jacobsthal(k - 1))), pow2(k + 1)), 2);
      return add(sub(rect_count(k), mul(2, jacobsthal(k))), pow2(k));
    case Formula::loop_klein_chain:
      return loop_klein_lemma_chain(n, options);
    case Formula::loop_mobius_even_closed:
      require_at_least(f, n, 2);
      if (!even) throw SequenceError("A213387_form takes an even strip length, got " + std::to_string(n));
      return sub(sub(mul(5, pow2(k)), mul(3, k)), 4);
    case Formula::loop_mobius_odd_closed:
      require_at_least(f, n, 1);
      if (even) throw SequenceError("A123203_form takes an odd strip length, got " + std::to_string(n));
      return sub(pow2(k + 3), mul(3, k + 2));
  }
  throw SequenceError("unhandled formula");
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::rectangle, "rectangle"}, {Family::annulus, "annulus"},   {Family::mobius, "mobius"},
    {Family::klein, "klein"},         {Family::projective, "projective"}, {Family::last_one, "last-one"},
    {Family::last_two, "last-two"},   {Family::bicolumn, "bicolumn"},
};

int family_min_n(Family f) { return f == Family::bicolumn ? 2 : 1; }

}  // namespace

std::string_view to_string(Family f) {
  for (auto [fam, name] : kFamilies)
    if (fam == f) return name;
  return "?";
}

Family parse_family(std::string_view s) {
  for (auto [fam, name] : kFamilies)
    if (name == s) return fam;
  throw SequenceError("unknown family '" + std::string(s) + "'");
}

std::uint64_t oracle_count(Family family, Rule rule, int n, const EnumerationOptions& options) {
  if (n < family_min_n(family))
    throw SequenceError("family " + std::string(to_string(family)) + " needs n >= " +
                        std::to_string(family_min_n(family)));
  switch (family) {
    case Family::rectangle: return count_valid(build_rectangle(2, n), rule, {}, options).count;
    case Family::annulus: return count_valid(build_annulus(n), rule, {}, options).count;
    case Family::mobius: return count_valid(build_mobius(n), rule, {}, options).count;
    case Family::klein: return count_valid(build_klein(n), rule, {}, options).count;
    case Family::projective: return count_valid(build_projective(n), rule, {}, options).count;
    case Family::last_one: return refined_rectangle_counts(n, options).last1;
    case Family::last_two: return refined_rectangle_counts(n, options).last2;
    case Family::bicolumn: return *refined_rectangle_counts(n, options).first2_last1;
  }
  throw SequenceError("unhandled family");
}

std::vector<Formula> applicable_formulas(Family family, Rule rule, int n) {
  switch (family) {
    case Family::rectangle:
    case Family::annulus:
      return {Formula::rectangle_count};
    case Family::mobius:
      if (rule == Rule::square) return {Formula::square_rule};
      if (n % 2 == 0) return {Formula::loop_mobius, Formula::loop_mobius_even_closed};
      return {Formula::loop_mobius, Formula::loop_mobius_odd_closed};
    case Family::klein:
    case Family::projective:
      if (rule == Rule::square) return {Formula::square_rule};
      if (n >= 2) return {Formula::loop_klein, Formula::loop_klein_chain};
      return {Formula::loop_klein};
    case Family::last_one:
      return {Formula::last_column_one_water, Formula::one_water_recurrence3, Formula::one_water_recurrence2};
    case Family::last_two:
      return {Formula::last_column_two_water};
    case Family::bicolumn:
      return {Formula::bicolumn_recurrence};
  }
  return {};
}

int CountReport::disagreements() const {
  int d = 0;
  for (const auto& row : rows)
    for (const auto& v : row.values)
      if (!v.agrees) ++d;
  return d;
}

CountReport verify(Family family, Rule rule, int min_n, int max_n, const EnumerationOptions& options) {
  CountReport report;
  report.family = family;
  report.rule = rule;
  for (int n = std::max(min_n, family_min_n(family)); n <= max_n; ++n) {
    CountRow row;
    row.n = n;
    row.oracle = oracle_count(family, rule, n, options);
    for (Formula f : applicable_formulas(family, rule, n)) {
      std::int64_t v = eval(f, n, options);
      row.values.push_back({f, v, v >= 0 && static_cast<std::uint64_t>(v) == row.oracle});
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_report(const CountReport& report) {
  std::vector<Formula> columns;
  for (const auto& row : report.rows)
    for (const auto& v : row.values)
      if (std::find(columns.begin(), columns.end(), v.formula) == columns.end()) columns.push_back(v.formula);

  std::ostringstream out;
  out << "# family=" << to_string(report.family) << " rule=" << to_string(report.rule) << '\n';
  auto width = [](std::string_view s) { return static_cast<int>(std::max<std::size_t>(s.size(), 10)) + 2; };
  out << std::left << std::setw(5) << "n" << std::setw(width("oracle")) << "oracle";
  for (Formula f : columns) out << std::setw(width(formula_id(f))) << formula_id(f);
  out << '\n';
  for (const auto& row : report.rows) {
    out << std::setw(5) << row.n << std::setw(width("oracle")) << row.oracle;
    for (Formula f : columns) {
      auto it = std::find_if(row.values.begin(), row.values.end(), [f](const FormulaValue& v) { return v.formula == f; });
      std::string cell = "-";
      if (it != row.values.end()) cell = std::to_string(it->value) + (it->agrees ? "" : "!");
      out << std::setw(width(formula_id(f))) << cell;
    }
    out << '\n';
  }
  out << "# disagreements: " << report.disagreements() << '\n';
  // Trailing spaces from setw are not useful in committed reports.
  std::string text = out.str();
  std::string cleaned;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    cleaned += line + '\n';
  }
  return cleaned;
}

std::string format_report_json_lines(const CountReport& report) {
  std::string out;
  for (const auto& row : report.rows) {
    nlohmann::ordered_json j;
    j["family"] = to_string(report.family);
    j["rule"] = to_string(report.rule);
    j["n"] = row.n;
    j["oracle"] = row.oracle;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& v : row.values) values[std::string(formula_id(v.formula))] = {{"value", v.value}, {"agree", v.agrees}};
    j["formulas"] = std::move(values);
    out += j.dump() + '\n';
  }
  return out;
}

static void require_range(int min_n, int max_n) {
  if (min_n > max_n)
    throw SequenceError("empty range " + std::to_string(min_n) + ".." + std::to_string(max_n));
}

std::string bfile(Formula f, int min_n, int max_n, const EnumerationOptions& options) {
  require_range(min_n, max_n);
  std::string out;
  for (int n = min_n; n <= max_n; ++n) out += std::to_string(n) + ' ' + std::to_string(eval(f, n, options)) + '\n';
  return out;
}

std::string bfile(Family family, Rule rule, int min_n, int max_n, const EnumerationOptions& options) {
  require_range(min_n, max_n);
  std::string out;
  for (int n = std::max(min_n, family_min_n(family)); n <= max_n; ++n)
    out += std::to_string(n) + ' ' + std::to_string(oracle_count(family, rule, n, options)) + '\n';
  return out;
}

}  // namespace nurikabe

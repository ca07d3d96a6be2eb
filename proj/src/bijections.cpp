#include "nurikabe/bijections.hpp"

#include <algorithm>
#include <sstream>

namespace nurikabe {

int rect_square(int k, int row, int col) {
  if (k < 1 || row < 1 || row > 2 || col < 1 || col > k)
    throw RuleError("cell (" + std::to_string(row) + ", " + std::to_string(col) + ") is outside a 2 x " +
                    std::to_string(k) + " rectangle");
  return (row - 1) * k + col;
}

std::uint64_t red_mask(std::uint64_t strip, int strip_length) {
  if (strip_length < 2 || strip_length % 2 != 0)
    throw RuleError("rectangular reduction needs an even strip length, got " + std::to_string(strip_length));
  const int k = strip_length / 2;
  std::uint64_t rect = 0;
  for (int j = 1; j <= k; ++j) {
    if ((strip >> (j - 1)) & 1U) rect |= std::uint64_t{1} << (rect_square(k, 1, j) - 1);
    if ((strip >> (strip_length - j)) & 1U) rect |= std::uint64_t{1} << (rect_square(k, 2, j) - 1);
  }
  return rect;
}

std::uint64_t red_inverse_mask(std::uint64_t rect, int k) {
  if (k < 1) throw RuleError("rectangle needs at least one column");
  std::uint64_t strip = 0;
  for (int j = 1; j <= k; ++j) {
    if ((rect >> (rect_square(k, 1, j) - 1)) & 1U) strip |= std::uint64_t{1} << (j - 1);
    if ((rect >> (rect_square(k, 2, j) - 1)) & 1U) strip |= std::uint64_t{1} << (2 * k - j);
  }
  return strip;
}

std::pair<std::uint64_t, bool> contr_mask(std::uint64_t strip, int strip_length) {
  if (strip_length < 1 || strip_length % 2 != 1)
    throw RuleError("contraction needs an odd strip length, got " + std::to_string(strip_length));
  const int k = strip_length / 2;  // central square is k+1, bit k
  const std::uint64_t low = strip & ((std::uint64_t{1} << k) - 1);
  const std::uint64_t high = strip >> (k + 1);
  return {low | (high << k), ((strip >> k) & 1U) != 0};
}

std::uint64_t contr_inverse_mask(std::uint64_t strip, int strip_length, bool central_water) {
  if (strip_length < 0 || strip_length % 2 != 0)
    throw RuleError("inverse contraction needs an even strip length, got " + std::to_string(strip_length));
  const int k = strip_length / 2;
  const std::uint64_t low = strip & ((std::uint64_t{1} << k) - 1);
  const std::uint64_t high = strip >> k;
  return low | (central_water ? std::uint64_t{1} << k : 0) | (high << (k + 1));
}

Coloring red(const Coloring& strip) {
  return Coloring::from_mask(strip.size(), red_mask(strip.to_mask(), strip.size()));
}

Coloring red_inverse(const Coloring& rect) {
  if (rect.size() % 2 != 0) throw RuleError("2 x k rectangle coloring must have even size");
  return Coloring::from_mask(rect.size(), red_inverse_mask(rect.to_mask(), rect.size() / 2));
}

Contraction contr(const Coloring& strip) {
  auto [mask, central] = contr_mask(strip.to_mask(), strip.size());
  return {Coloring::from_mask(strip.size() - 1, mask), central};
}

Coloring contr_inverse(const Coloring& strip, bool central_water) {
  return Coloring::from_mask(strip.size() + 1, contr_inverse_mask(strip.to_mask(), strip.size(), central_water));
}

namespace {

constexpr std::pair<BijectionMap, std::string_view> kMaps[] = {
    {BijectionMap::square_even, "square-even"},
    {BijectionMap::square_odd, "square-odd"},
    {BijectionMap::loop_even, "loop-even"},
    {BijectionMap::loop_odd, "loop-odd"},
    {BijectionMap::central_land_square, "central-land-square"},
    {BijectionMap::central_land_loop, "central-land-loop"},
};

bool is_odd_map(BijectionMap m) { return m != BijectionMap::square_even && m != BijectionMap::loop_even; }

Rule map_rule(BijectionMap m) {
  switch (m) {
    case BijectionMap::square_even:
    case BijectionMap::square_odd:
    case BijectionMap::central_land_square:
      return Rule::square;
    default:
      return Rule::loop;
  }
}

}  // namespace

std::string_view to_string(BijectionMap m) {
  for (auto [map, name] : kMaps)
    if (map == m) return name;
  return "?";
}

BijectionMap parse_bijection_map(std::string_view s) {
  for (auto [map, name] : kMaps)
    if (name == s) return map;
  throw RuleError("unknown bijection map '" + std::string(s) + "'");
}

const std::vector<BijectionMap>& all_bijection_maps() {
  static const std::vector<BijectionMap> all = [] {
    std::vector<BijectionMap> v;
    for (auto [map, name] : kMaps) v.push_back(map);
    return v;
  }();
  return all;
}

BijectionReport check_bijection(BijectionMap map, int k, const EnumerationOptions& options) {
  if (k < 1) throw RuleError("bijection checks need k >= 1");
  BijectionReport report;
  report.map = map;
  report.k = k;

  const bool odd = is_odd_map(map);
  const int strip_length = odd ? 2 * k + 1 : 2 * k;
  const Rule rule = map_rule(map);
  const bool central_land_only = map == BijectionMap::central_land_square || map == BijectionMap::central_land_loop;
  const bool tagged = map == BijectionMap::square_odd || map == BijectionMap::loop_odd;

  Constraint domain_constraint;
  if (central_land_only) domain_constraint.forced_land = {k + 1};
  auto domain = enumerate_valid(build_mobius(strip_length), rule, domain_constraint, options).colorings.value();
  report.domain_size = domain.size();

  // Rectangles are rule-independent.
  const auto rects = enumerate_valid(build_rectangle(2, k), Rule::square, {}, options).colorings.value();
  const std::uint64_t last_top = std::uint64_t{1} << (rect_square(k, 1, k) - 1);
  const std::uint64_t last_bottom = std::uint64_t{1} << (rect_square(k, 2, k) - 1);
  auto last_column_water = [&](std::uint64_t r) {
    return static_cast<int>((r & last_top) != 0) + static_cast<int>((r & last_bottom) != 0);
  };
  const std::uint64_t water_tag = std::uint64_t{1} << (2 * k);

  std::vector<std::uint64_t> target;
  auto add_part = [&](std::string name, auto pred, std::uint64_t tag) {
    std::uint64_t count = 0;
    for (std::uint64_t r : rects)
      if (pred(r)) {
        target.push_back(tag | r);
        ++count;
      }
    report.target_parts.emplace_back(std::move(name), count);
  };
  auto any = [](std::uint64_t) { return true; };
  auto last1 = [&](std::uint64_t r) { return last_column_water(r) == 1; };
  auto last2 = [&](std::uint64_t r) { return last_column_water(r) == 2; };
  auto all_land = [](std::uint64_t r) { return r == 0; };

  switch (map) {
    case BijectionMap::square_even:
    case BijectionMap::central_land_square:
    case BijectionMap::central_land_loop:
      add_part("rectangles", any, 0);
      break;
    case BijectionMap::loop_even:
      add_part("last-column-none", [&](std::uint64_t r) { return last_column_water(r) == 0; }, 0);
      add_part("last-column-one", last1, 0);
      break;
    case BijectionMap::square_odd:
      add_part("rectangles", any, 0);
      add_part("last-column-one", last1, water_tag);
      add_part("last-column-two", last2, water_tag);
      add_part("all-land", all_land, water_tag);
      break;
    case BijectionMap::loop_odd:
      add_part("rectangles", any, 0);
      add_part("last-column-one", last1, water_tag);
      add_part("all-land", all_land, water_tag);
      break;
  }
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  report.target_size = target.size();

  std::vector<std::pair<std::uint64_t, std::uint64_t>> images;  // (image, strip)
  images.reserve(domain.size());
  for (std::uint64_t strip : domain) {
    std::uint64_t image = 0;
    if (odd) {
      auto [even_strip, central] = contr_mask(strip, strip_length);
      image = red_mask(even_strip, 2 * k) | (tagged && central ? water_tag : 0);
    } else {
      image = red_mask(strip, strip_length);
    }
    images.emplace_back(image, strip);
  }

  std::vector<std::uint64_t> bad;
  report.image_in_target = true;
  for (auto [image, strip] : images) {
    if (!std::binary_search(target.begin(), target.end(), image)) {
      report.image_in_target = false;
      bad.push_back(strip);
    }
  }
  std::sort(images.begin(), images.end());
  report.injective = true;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].first == images[i - 1].first) {
      report.injective = false;
      bad.push_back(images[i - 1].second);
      bad.push_back(images[i].second);
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  report.counterexamples = std::move(bad);

  for (std::uint64_t t : target) {
    auto it = std::lower_bound(images.begin(), images.end(), std::make_pair(t, std::uint64_t{0}));
    if (it == images.end() || it->first != t) report.uncovered.push_back(t);
  }
  report.surjective = report.uncovered.empty();
  return report;
}

std::string format_bijection_report(const BijectionReport& r) {
  std::ostringstream out;
  out << "map=" << to_string(r.map) << " k=" << r.k << " domain=" << r.domain_size << " target=" << r.target_size
      << " (";
  for (std::size_t i = 0; i < r.target_parts.size(); ++i)
    out << (i ? " + " : "") << r.target_parts[i].first << ' ' << r.target_parts[i].second;
  out << ")\n";
  out << "image_in_target=" << (r.image_in_target ? "yes" : "no") << " injective=" << (r.injective ? "yes" : "no")
      << " surjective=" << (r.surjective ? "yes" : "no") << " result=" << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (std::uint64_t c : r.counterexamples) {
    out << "counterexample strip water={";
    auto sq = mask_to_squares(c);
    for (std::size_t i = 0; i < sq.size(); ++i) out << (i ? "," : "") << sq[i];
    out << "}\n";
  }
  for (std::uint64_t u : r.uncovered) out << "uncovered target " << u << '\n';
  return out.str();
}

}  // namespace nurikabe

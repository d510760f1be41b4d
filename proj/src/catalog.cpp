#include "toriq/catalog.hpp"

#include <algorithm>
#include <optional>

#include <numeric>

namespace toriq::catalog {

FanPtr projective_space(int n) {
  FanData d;
  d.dim = n;
  d.rays.push_back(IntVec(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    d.rays.push_back(e);
  }
  for (int omit = n; omit >= 0; --omit) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != omit) c.push_back(i);
    d.max_cones.emplace_back(c);
  }
  return Fan::make(std::move(d), "P" + std::to_string(n));
}

FanPtr product(const Fan& a, const Fan& b) {
  FanData d;
  d.dim = a.dim() + b.dim();
  for (const auto& u : a.rays()) {
    IntVec v = u;
    v.resize(static_cast<std::size_t>(d.dim), 0);
    d.rays.push_back(v);
  }
  for (const auto& u : b.rays()) {
    IntVec v(static_cast<std::size_t>(a.dim()), 0);
    v.insert(v.end(), u.begin(), u.end());
    d.rays.push_back(v);
  }
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      std::vector<int> c = ca.indices();
      for (int i : cb) c.push_back(i + a.num_rays());
      d.max_cones.emplace_back(c);
    }
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "x" + b.name();
  return Fan::make_unchecked(std::move(d), name);
}

FanPtr product_of_projective_spaces(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty product");
  FanPtr f = projective_space(dims[0]);
  for (std::size_t i = 1; i < dims.size(); ++i) f = product(*f, *projective_space(dims[i]));
  return f;
}

FanPtr p1xp1() {
  FanData d;
  d.dim = 2;
  d.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  d.max_cones = {RaySet{0, 2}, RaySet{0, 3}, RaySet{1, 2}, RaySet{1, 3}};
  return Fan::make(std::move(d), "P1xP1");
}

FanPtr bl0p2() {
  FanData d;
  d.dim = 2;
  d.rays = {{0, -1}, {1, 0}, {-1, 1}, {0, 1}};
  d.max_cones = {RaySet{1, 3}, RaySet{2, 3}, RaySet{0, 2}, RaySet{0, 1}};
  return Fan::make(std::move(d), "Bl0P2");
}

FanPtr polygon(const std::vector<IntVec>& rays_ccw, std::string name) {
  FanData d;
  d.dim = 2;
  d.rays = rays_ccw;
  const int r = static_cast<int>(rays_ccw.size());
  for (int i = 0; i < r; ++i) d.max_cones.push_back(RaySet{i, (i + 1) % r});
  return Fan::make(std::move(d), std::move(name));
}

FanPtr hirzebruch(int a) { return polygon({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, "F" + std::to_string(a)); }

FanPtr dp7() { return polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}}, "dP7"); }

FanPtr dp6() { return polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}, "dP6"); }

namespace {

std::optional<int> small_int(const std::string& s) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return std::stoi(s);
}

}  // namespace

FanPtr by_name(const std::string& name) {
  if (name == "P1xP1") return p1xp1();
  if (name == "Bl0P2") return bl0p2();
  if (name == "dP7") return dp7();
  if (name == "dP6") return dp6();
  if (name.size() > 1 && name[0] == 'F')
    if (auto a = small_int(name.substr(1))) return hirzebruch(*a);
  std::vector<int> dims;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('x', start), name.size());
    const std::string part = name.substr(start, end - start);
    if (part.size() < 2 || part[0] != 'P') return nullptr;
    auto n = small_int(part.substr(1));
    if (!n || *n < 1) return nullptr;
    dims.push_back(*n);
    start = end + 1;
  }
  if (dims.empty()) return nullptr;
  return dims.size() == 1 ? projective_space(dims[0]) : product_of_projective_spaces(dims);
}

}  // namespace toriq::catalog

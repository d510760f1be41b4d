#include "toriq/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "toriq/linalg.hpp"

namespace toriq {

RaySet::RaySet(std::vector<int> idx) : idx_(std::move(idx)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

bool RaySet::contains(int rho) const { return std::binary_search(idx_.begin(), idx_.end(), rho); }

bool RaySet::subset_of(const RaySet& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

std::uint64_t RaySet::mask() const {
  std::uint64_t m = 0;
  for (int i : idx_) m |= std::uint64_t{1} << i;
  return m;
}

std::string to_string(const RaySet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s.indices()[i]);
  return out + "}";
}

namespace {

std::string join_msgs(const std::vector<std::string>& v) {
  std::string out = "invalid fan";
  for (const auto& s : v) out += "; " + s;
  return out;
}

std::string vec_str(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k;
    while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

RatMatrix ray_matrix(const FanData& d, const RaySet& s) {
  // columns are the rays of s
  RatMatrix m(static_cast<std::size_t>(d.dim), RatVec(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j)
    for (int i = 0; i < d.dim; ++i)
      m[static_cast<std::size_t>(i)][j] = make_rational(d.rays[static_cast<std::size_t>(s.indices()[j])][static_cast<std::size_t>(i)]);
  return m;
}

std::vector<IntVec> dual_rows(const FanData& d, const RaySet& s) {
  auto inv = inverse(ray_matrix(d, s));
  if (!inv) throw std::logic_error("singular cone " + to_string(s));
  std::vector<IntVec> rows;
  for (auto& r : *inv) {
    IntVec row;
    for (auto& q : r) row.push_back(to_int64(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_structure(const FanData& d) {
  if (d.dim < 1) throw std::invalid_argument("fan dimension must be positive");
  if (d.rays.empty()) throw std::invalid_argument("fan has no rays");
  if (d.rays.size() > 63) throw std::invalid_argument("at most 63 rays are supported");
  for (std::size_t i = 0; i < d.rays.size(); ++i)
    if (static_cast<int>(d.rays[i].size()) != d.dim)
      throw std::invalid_argument("ray " + std::to_string(i) + " has length " + std::to_string(d.rays[i].size()) +
                                  ", expected " + std::to_string(d.dim));
  if (d.max_cones.empty()) throw std::invalid_argument("fan has no maximal cones");
  for (const auto& c : d.max_cones)
    for (int i : c)
      if (i < 0 || i >= static_cast<int>(d.rays.size()))
        throw std::invalid_argument("cone " + to_string(c) + " refers to a missing ray");
}

// True if sigma_i and sigma_j meet exactly in the cone over their common rays.
bool meet_in_common_face(const FanData& d, const RaySet& si, const RaySet& sj, const std::vector<IntVec>& dual_j) {
  const std::size_t n = static_cast<std::size_t>(d.dim);
  RatMatrix a;
  RatVec b;
  for (std::size_t k = 0; k < n; ++k) {
    RatVec row(n);
    row[k] = 1;
    a.push_back(row);
    b.push_back(0);
  }
  a.push_back(RatVec(n, Rational(1)));
  b.push_back(1);
  a.push_back(RatVec(n, Rational(-1)));
  b.push_back(-1);
  for (const auto& m : dual_j) {
    RatVec row(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t s = 0;
      const auto& u = d.rays[static_cast<std::size_t>(si.indices()[k])];
      for (std::size_t t = 0; t < n; ++t) s += m[t] * u[t];
      row[k] = make_rational(s);
    }
    a.push_back(row);
    b.push_back(0);
  }
  for (const auto& v : polytope_vertices(a, b))
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != 0 && !sj.contains(si.indices()[k])) return false;
  return true;
}

}  // namespace

FanError::FanError(std::vector<std::string> violations)
    : std::invalid_argument(join_msgs(violations)), violations_(std::move(violations)) {}

std::vector<std::string> validate_fan(const FanData& d) {
  check_structure(d);
  std::vector<std::string> bad;
  const int n = d.dim;
  const int r = static_cast<int>(d.rays.size());

  for (int i = 0; i < r; ++i) {
    const auto& u = d.rays[static_cast<std::size_t>(i)];
    std::int64_t g = 0;
    for (auto v : u) g = std::gcd(g, v);
    if (g != 1) bad.push_back("ray " + std::to_string(i) + " " + vec_str(u) + " is not primitive");
    for (int j = 0; j < i; ++j)
      if (d.rays[static_cast<std::size_t>(j)] == u)
        bad.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  for (std::size_t c = 0; c < d.max_cones.size(); ++c) {
    const auto& s = d.max_cones[c];
    for (int i : s) used[static_cast<std::size_t>(i)] = true;
    if (static_cast<int>(s.size()) != n) {
      bad.push_back("cone " + to_string(s) + " has " + std::to_string(s.size()) + " distinct rays, expected " +
                    std::to_string(n));
      continue;
    }
    for (std::size_t c2 = 0; c2 < c; ++c2)
      if (d.max_cones[c2] == s) bad.push_back("cone " + to_string(s) + " is listed twice");
    Rational det = determinant(ray_matrix(d, s));
    if (det != 1 && det != -1)
      bad.push_back("cone " + to_string(s) + " is not unimodular (det " + det.get_str() + ")");
  }
  for (int i = 0; i < r; ++i)
    if (!used[static_cast<std::size_t>(i)]) bad.push_back("ray " + std::to_string(i) + " lies in no maximal cone");
  if (!bad.empty()) return bad;

  // every codimension-one face must be shared by exactly two maximal cones
  const auto& cones = d.max_cones;
  std::map<std::uint64_t, std::vector<int>> faces;
  for (int c = 0; c < static_cast<int>(cones.size()); ++c) {
    const auto& s = cones[static_cast<std::size_t>(c)];
    for (int drop = 0; drop < n; ++drop) {
      std::uint64_t m = s.mask() & ~(std::uint64_t{1} << s.indices()[static_cast<std::size_t>(drop)]);
      faces[m].push_back(c);
    }
  }
  std::vector<std::vector<int>> adj(cones.size());
  for (const auto& [m, cs] : faces) {
    if (cs.size() != 2) {
      std::vector<int> idx;
      for (int i = 0; i < r; ++i)
        if (m >> i & 1) idx.push_back(i);
      bad.push_back("face " + to_string(RaySet(idx)) + " lies in " + std::to_string(cs.size()) +
                    " maximal cone(s), expected 2 (fan not complete)");
      continue;
    }
    adj[static_cast<std::size_t>(cs[0])].push_back(cs[1]);
    adj[static_cast<std::size_t>(cs[1])].push_back(cs[0]);
  }
  std::vector<bool> seen(cones.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int nb : adj[static_cast<std::size_t>(c)])
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = true;
        ++count;
        q.push(nb);
      }
  }
  if (count != cones.size()) bad.push_back("maximal cones are not connected through walls (fan not complete)");

  std::vector<std::vector<IntVec>> duals;
  for (const auto& s : cones) duals.push_back(dual_rows(d, s));
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (!meet_in_common_face(d, cones[i], cones[j], duals[j]))
        bad.push_back("cones " + to_string(cones[i]) + " and " + to_string(cones[j]) +
                      " overlap beyond their common face");
  return bad;
}

std::shared_ptr<const Fan> Fan::make(FanData data, std::string name) {
  auto bad = validate_fan(data);
  if (!bad.empty()) throw FanError(std::move(bad));
  return make_unchecked(std::move(data), std::move(name));
}

std::shared_ptr<const Fan> Fan::make_unchecked(FanData data, std::string name) {
  std::shared_ptr<Fan> f(new Fan());
  f->data_ = std::move(data);
  f->name_ = std::move(name);
  const auto& cones = f->data_.max_cones;
  for (const auto& s : cones) f->dual_.push_back(dual_rows(f->data_, s));

  std::map<RaySet, Wall> walls;
  for (int c = 0; c < static_cast<int>(cones.size()); ++c) {
    const auto& s = cones[static_cast<std::size_t>(c)];
    for (int drop : s) {
      std::vector<int> rest;
      for (int i : s)
        if (i != drop) rest.push_back(i);
      RaySet tau(rest);
      auto it = walls.find(tau);
      if (it == walls.end()) {
        Wall w;
        w.rays = tau;
        w.cone_a = c;
        w.ray_a = drop;
        walls.emplace(tau, w);
      } else {
        it->second.cone_b = c;
        it->second.ray_b = drop;
      }
    }
  }
  for (auto& [tau, w] : walls) {
    // express u_b in the basis of cone_a
    const auto& sa = f->cone(w.cone_a);
    const auto& dual = f->dual_[static_cast<std::size_t>(w.cone_a)];
    w.relation.assign(static_cast<std::size_t>(f->num_rays()), 0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      int rho = sa.indices()[i];
      std::int64_t c = f->pairing(dual[i], w.ray_b);
      if (rho == w.ray_a) {
        if (c != -1) throw std::logic_error("wall relation coefficient is not -1");
        continue;
      }
      w.relation[static_cast<std::size_t>(rho)] = -c;
    }
    w.relation[static_cast<std::size_t>(w.ray_a)] = 1;
    w.relation[static_cast<std::size_t>(w.ray_b)] = 1;
    f->walls_.push_back(w);
  }
  return f;
}

int Fan::cone_index(const RaySet& s) const {
  for (int i = 0; i < num_cones(); ++i)
    if (cone(i) == s) return i;
  return -1;
}

bool Fan::is_face(const RaySet& s) const {
  for (const auto& c : data_.max_cones)
    if (s.subset_of(c)) return true;
  return false;
}

std::int64_t Fan::pairing(const IntVec& m, int rho) const {
  const auto& u = ray(rho);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += m[i] * u[i];
  return s;
}

std::vector<RaySet> primitive_collections(const Fan& fan) {
  std::vector<std::uint64_t> cone_masks;
  for (const auto& c : fan.max_cones()) cone_masks.push_back(c.mask());
  auto is_face = [&](std::uint64_t m) {
    return std::any_of(cone_masks.begin(), cone_masks.end(), [&](std::uint64_t c) { return (m & ~c) == 0; });
  };
  std::vector<RaySet> out;
  const int r = fan.num_rays();
  for (int k = 1; k <= fan.dim() + 1; ++k) {
    for_each_subset(r, k, [&](const std::vector<int>& idx) {
      std::uint64_t m = 0;
      for (int i : idx) m |= std::uint64_t{1} << i;
      if (is_face(m)) return;
      for (int i : idx)
        if (!is_face(m & ~(std::uint64_t{1} << i))) return;
      out.emplace_back(idx);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> locate_cones(const Fan& fan, const IntVec& u) {
  if (static_cast<int>(u.size()) != fan.dim()) throw std::invalid_argument("vector has wrong dimension");
  std::vector<int> out;
  for (int c = 0; c < fan.num_cones(); ++c) {
    bool inside = true;
    for (const auto& m : fan.dual_basis(c)) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < u.size(); ++i) s += m[i] * u[i];
      if (s < 0) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(c);
  }
  return out;
}

std::vector<IntVec> dual_basis(const Fan& fan, const RaySet& sigma) {
  int c = fan.cone_index(sigma);
  if (c < 0) throw std::invalid_argument("not a maximal cone: " + to_string(sigma));
  return fan.dual_basis(c);
}

}  // namespace toriq

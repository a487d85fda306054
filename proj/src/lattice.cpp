#include "aeup/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "aeup/error.hpp"

namespace aeup {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupParams::GroupParams(std::int64_t modulus, int dimension)
    : modulus_(modulus), dimension_(dimension), size_(1) {
  if (modulus < 2) throw ParameterError("modulus N must be >= 2, got " + std::to_string(modulus));
  if (dimension < 1) {
    throw ParameterError("dimension d must be >= 1, got " + std::to_string(dimension));
  }
  // Keep N^d (and sums of two indices) well inside 64 bits.
  constexpr std::uint64_t kMax = std::uint64_t{1} << 62;
  for (int i = 0; i < dimension; ++i) {
    if (size_ > kMax / static_cast<std::uint64_t>(modulus)) {
      throw ParameterError("N^d does not fit in exact 64-bit range");
    }
    size_ *= static_cast<std::uint64_t>(modulus);
  }
}

void GroupParams::require_dense(std::string_view what) const {
  if (!dense_ok()) {
    throw CapacityError(std::string(what) + ": N^d = " + std::to_string(size_) +
                        " exceeds dense limit 2^24");
  }
}

RingVector GroupParams::point(std::span<const std::int64_t> coords) const {
  if (coords.size() != static_cast<std::size_t>(dimension_)) {
    throw ParameterError("point has " + std::to_string(coords.size()) +
                         " coordinates, expected " + std::to_string(dimension_));
  }
  std::vector<std::int64_t> out(coords.begin(), coords.end());
  for (auto& c : out) c = mod(c, modulus_);
  return RingVector(std::move(out));
}

RingVector GroupParams::point(std::initializer_list<std::int64_t> coords) const {
  return point(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

RingVector GroupParams::zero() const {
  return RingVector(std::vector<std::int64_t>(static_cast<std::size_t>(dimension_), 0));
}

bool GroupParams::is_canonical(const RingVector& v) const {
  if (v.dimension() != static_cast<std::size_t>(dimension_)) return false;
  return std::all_of(v.coords().begin(), v.coords().end(),
                     [this](std::int64_t c) { return c >= 0 && c < modulus_; });
}

RingVector GroupParams::add(const RingVector& a, const RingVector& b) const {
  std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(out[i] + b[i], modulus_);
  return RingVector(std::move(out));
}

RingVector GroupParams::sub(const RingVector& a, const RingVector& b) const {
  std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(out[i] - b[i], modulus_);
  return RingVector(std::move(out));
}

RingVector GroupParams::negate(const RingVector& a) const {
  std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
  for (auto& c : out) c = mod(-c, modulus_);
  return RingVector(std::move(out));
}

RingVector GroupParams::scale(std::int64_t k, const RingVector& a) const {
  const std::int64_t kk = mod(k, modulus_);
  std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
  for (auto& c : out) c = static_cast<std::int64_t>((static_cast<__int128>(kk) * c) % modulus_);
  return RingVector(std::move(out));
}

std::int64_t GroupParams::dot(const RingVector& m, const RingVector& x) const {
  __int128 acc = 0;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    acc = (acc + static_cast<__int128>(m[i]) * x[i]) % modulus_;
  }
  return mod(static_cast<std::int64_t>(acc), modulus_);
}

std::uint64_t GroupParams::index_of(const RingVector& v) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    idx = idx * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(v[i]);
  }
  return idx;
}

RingVector GroupParams::point_at(std::uint64_t index) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(dimension_));
  const auto n = static_cast<std::uint64_t>(modulus_);
  for (int i = dimension_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return RingVector(std::move(out));
}

std::uint64_t GroupParams::add_index(std::uint64_t a, std::uint64_t b) const {
  const auto n = static_cast<std::uint64_t>(modulus_);
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < dimension_; ++i) {
    std::uint64_t s = a % n + b % n;
    if (s >= n) s -= n;
    out += s * place;
    place *= n;
    a /= n;
    b /= n;
  }
  return out;
}

std::uint64_t GroupParams::sub_index(std::uint64_t a, std::uint64_t b) const {
  return add_index(a, negate_index(b));
}

std::uint64_t GroupParams::negate_index(std::uint64_t a) const {
  const auto n = static_cast<std::uint64_t>(modulus_);
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < dimension_; ++i) {
    const std::uint64_t c = a % n;
    out += (c == 0 ? 0 : n - c) * place;
    place *= n;
    a /= n;
  }
  return out;
}

std::int64_t GroupParams::dot_index(std::uint64_t m, std::uint64_t x) const {
  const auto n = static_cast<std::uint64_t>(modulus_);
  unsigned __int128 acc = 0;
  for (int i = 0; i < dimension_; ++i) {
    acc = (acc + static_cast<unsigned __int128>(m % n) * (x % n)) % n;
    m /= n;
    x /= n;
  }
  return static_cast<std::int64_t>(acc);
}

SupportSet::SupportSet(GroupParams params) : params_(params) {}

SupportSet::SupportSet(GroupParams params, std::span<const RingVector> points)
    : params_(params) {
  indices_.reserve(points.size());
  for (const auto& p : points) {
    if (!params_.is_canonical(p)) {
      throw ParameterError("point is not a canonical element of Z_N^d");
    }
    indices_.push_back(params_.index_of(p));
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

SupportSet::SupportSet(GroupParams params, std::initializer_list<RingVector> points)
    : SupportSet(params, std::span<const RingVector>(points.begin(), points.size())) {}

SupportSet SupportSet::from_indices(GroupParams params, std::vector<std::uint64_t> indices) {
  for (auto i : indices) {
    if (i >= params.size()) throw ParameterError("point index out of range");
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  SupportSet out(params);
  out.indices_ = std::move(indices);
  return out;
}

bool SupportSet::contains(const RingVector& v) const {
  return params_.is_canonical(v) && contains_index(params_.index_of(v));
}

bool SupportSet::contains_index(std::uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::vector<RingVector> SupportSet::points() const {
  std::vector<RingVector> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(params_.point_at(i));
  return out;
}

SupportSet full_group(const GroupParams& params) {
  params.require_dense("full_group");
  std::vector<std::uint64_t> idx(params.size());
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  return SupportSet::from_indices(params, std::move(idx));
}

SupportSet make_interval_grid(const GroupParams& params, std::int64_t m) {
  if (m < 1 || m >= params.modulus()) {
    throw ParameterError("interval length m must satisfy 1 <= m < N, got " + std::to_string(m));
  }
  const int d = params.dimension();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(m);
  std::vector<RingVector> pts;
  pts.reserve(count);
  std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    pts.emplace_back(digits);
    for (int i = d - 1; i >= 0; --i) {
      auto& digit = digits[static_cast<std::size_t>(i)];
      if (++digit < m) break;
      digit = 0;
    }
  }
  return SupportSet(params, pts);
}

SupportSet make_cyclic_subgroup(const GroupParams& params, const RingVector& generator) {
  const RingVector g = params.point(generator.coords());
  std::vector<std::uint64_t> idx;
  const std::uint64_t step = params.index_of(g);
  std::uint64_t cur = 0;
  do {
    idx.push_back(cur);
    cur = params.add_index(cur, step);
  } while (cur != 0);
  return SupportSet::from_indices(params, std::move(idx));
}

SupportSet make_product_subgroup(const GroupParams& params,
                                 std::span<const std::int64_t> generators) {
  if (generators.size() != static_cast<std::size_t>(params.dimension())) {
    throw ParameterError("need one generator per coordinate");
  }
  const std::int64_t n = params.modulus();
  // <g> in Z_N is the set of multiples of gcd(g, N).
  std::vector<std::vector<std::int64_t>> factors;
  std::uint64_t count = 1;
  for (auto g : generators) {
    const std::int64_t step = std::gcd(mod(g, n), n);
    std::vector<std::int64_t> f;
    for (std::int64_t v = 0; v < n; v += step) f.push_back(v);
    count *= f.size();
    factors.push_back(std::move(f));
  }
  std::vector<RingVector> pts;
  pts.reserve(count);
  std::vector<std::size_t> pos(factors.size(), 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::int64_t> coords(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) coords[i] = factors[i][pos[i]];
    pts.emplace_back(std::move(coords));
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++pos[i] < factors[i].size()) break;
      pos[i] = 0;
    }
  }
  return SupportSet(params, pts);
}

SupportSet shift_set(const SupportSet& a, const RingVector& t) {
  const auto& p = a.params();
  const std::uint64_t ti = p.index_of(p.point(t.coords()));
  std::vector<std::uint64_t> idx;
  idx.reserve(a.size());
  for (auto i : a.indices()) idx.push_back(p.add_index(i, ti));
  return SupportSet::from_indices(p, std::move(idx));
}

SupportSet negate_set(const SupportSet& a) {
  const auto& p = a.params();
  std::vector<std::uint64_t> idx;
  idx.reserve(a.size());
  for (auto i : a.indices()) idx.push_back(p.negate_index(i));
  return SupportSet::from_indices(p, std::move(idx));
}

bool is_subgroup(const SupportSet& h) {
  if (!h.contains_index(0)) return false;
  const auto& p = h.params();
  for (auto a : h.indices()) {
    for (auto b : h.indices()) {
      if (!h.contains_index(p.add_index(a, b))) return false;
    }
  }
  return true;
}

SupportSet annihilator(const SupportSet& h) {
  if (!is_subgroup(h)) throw StructureError("annihilator: input set is not a subgroup");
  const auto& p = h.params();
  p.require_dense("annihilator");

  // A generating set suffices: m kills H iff it kills every generator.
  std::vector<std::uint64_t> gens;
  std::vector<char> in_span(p.size(), 0);
  std::vector<std::uint64_t> span{0};
  in_span[0] = 1;
  for (auto x : h.indices()) {
    if (in_span[x]) continue;
    gens.push_back(x);
    const std::vector<std::uint64_t> base = span;
    std::uint64_t kx = x;
    while (!in_span[kx]) {
      for (auto s : base) {
        const auto v = p.add_index(s, kx);
        if (!in_span[v]) {
          in_span[v] = 1;
          span.push_back(v);
        }
      }
      kx = p.add_index(kx, x);
    }
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < p.size(); ++m) {
    bool kills = true;
    for (auto g : gens) {
      if (p.dot_index(m, g) != 0) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(m);
  }
  return SupportSet::from_indices(p, std::move(out));
}

}  // namespace aeup

#include "levc/closed_forms.hpp"

#include <string>

namespace levc {

Rational multipartite_leverage(const MultipartiteSpec& spec, std::size_t part_index) {
    spec.validate();
    if (part_index < 1 || part_index > spec.part_sizes.size())
        throw DomainError("part index " + std::to_string(part_index) + " out of range (r=" +
                          std::to_string(spec.part_sizes.size()) + ")");
    const std::int64_t total = spec.total();
    const std::int64_t ti = spec.part_sizes[part_index - 1];
    const std::int64_t deg_i = total - ti;
    Rational sum;
    for (std::size_t k = 0; k < spec.part_sizes.size(); ++k) {
        if (k == part_index - 1) continue;
        const std::int64_t tk = spec.part_sizes[k];
        if (tk == ti) continue;  // equal part sizes contribute zero
        sum += Rational(BigInt(tk) * (tk - ti), BigInt(deg_i) + (total - tk));
    }
    return sum / Rational(deg_i);
}

Rational regular_product_leverage(std::int64_t r, const DegreeProfile& profile_in_g) {
    if (r < 0) throw DomainError("regular factor degree must be >= 0");
    profile_in_g.validate();
    const std::int64_t ki = profile_in_g.center_degree;
    Rational sum;
    for (auto kj : profile_in_g.neighbor_degrees)
        if (kj != ki) sum += Rational(ki - kj, 2 * r + ki + kj);
    return sum / Rational(r + ki);
}

Rational corner_leverage(int m) {
    if (m < 1) throw DomainError("corner leverage requires m >= 1");
    return Rational(-1, 2LL * m + 1);
}

Rational inner_corner_leverage(int m) {
    if (m < 1) throw DomainError("inner corner leverage requires m >= 1");
    return Rational(1, 8LL * m - 2);
}

Rational lattice_class_leverage(const LatticeClass& c) {
    if (c.x1 < 0 || c.x2 < 0 || c.x3 < 0)
        throw DomainError("lattice class counts must be nonnegative");
    const int m = c.m();
    if (m < 1) throw DomainError("lattice class requires m >= 1");
    const std::int64_t k = 2LL * m - c.x1;
    // x1 neighbors of degree k+1, x2 of degree k-1, the rest of degree k.
    return (Rational(c.x2, 2 * k - 1) - Rational(c.x1, 2 * k + 1)) / Rational(k);
}

std::vector<LatticeClass> enumerate_classes(int m) {
    if (m < 1) throw DomainError("enumerate_classes requires m >= 1");
    std::vector<LatticeClass> out;
    out.reserve(static_cast<std::size_t>((m + 2) * (m + 1) / 2));
    for (int x1 = 0; x1 <= m; ++x1)
        for (int x2 = 0; x2 <= m - x1; ++x2)
            out.push_back(LatticeClass{x1, x2, m - x1 - x2});
    return out;
}

BigInt class_multiplicity(const LatticeClass& c, VertexId n) {
    if (n < 5) throw DomainError("class multiplicity requires n >= 5");
    const int m = c.m();
    if (m < 1) throw DomainError("lattice class requires m >= 1");
    // Choose which coordinates fall in each class, then 2 edge values,
    // 2 near-edge values, n-4 interior values per coordinate.
    BigInt ways = binomial(m, c.x1) * binomial(m - c.x1, c.x2);
    ways <<= c.x1 + c.x2;  // * 2^x1 * 2^x2
    BigInt interior = 1;
    for (int i = 0; i < c.x3; ++i) interior *= n - 4;
    return ways * interior;
}

BigInt triangle_bound(int m) {
    if (m < 1) throw DomainError("triangle bound requires m >= 1");
    return binomial(m + 2, 2);
}

BigInt polytopal_bound(int m, int k) {
    if (m < 1 || k < 1) throw DomainError("polytopal bound requires m, k >= 1");
    return binomial(m + k + 1, k + 1);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<VertexId> lattice_coords(VertexId id, int m, VertexId n) {
    if (m < 1 || n < 1) throw DomainError("lattice coordinates require m, n >= 1");
    std::vector<VertexId> coords(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = id % n + 1;
        id /= n;
    }
    if (id != 0) throw DomainError("vertex id out of range for lattice");
    return coords;
}

LatticeClass classify_coords(const std::vector<VertexId>& coords, VertexId n) {
    if (n < 5) throw DomainError("coordinate classes require n >= 5");
    LatticeClass c;
    for (VertexId v : coords) {
        if (v < 1 || v > n) throw DomainError("lattice coordinate out of range");
        if (v == 1 || v == n)
            ++c.x1;
        else if (v == 2 || v == n - 1)
            ++c.x2;
        else
            ++c.x3;
    }
    return c;
}

} // namespace levc

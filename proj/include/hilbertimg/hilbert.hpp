#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hilbertimg {

/// Largest supported order * dims product. Point counts are held in 64-bit
/// unsigned integers and one bit is kept free.
inline constexpr unsigned max_curve_bits = 62;

/// Shape of a Hilbert curve: `order` recursion levels in `dims` dimensions.
///
/// The curve visits every cell of the grid [0, side)^dims exactly once, where
/// side = 2^order, for a total of theta = 2^(order * dims) points.
///
/// Only dims == 2 is verified against an independent construction. Higher
/// dimension counts go through the same code path and pass the bijection and
/// adjacency checks, but are considered experimental.
class CurveParams {
public:
    /// Throws sizing_error when order * dims exceeds max_curve_bits, and
    /// domain_error when either argument is zero.
    CurveParams(unsigned order, unsigned dims = 2);

    unsigned order() const noexcept { return order_; }
    unsigned dims() const noexcept { return dims_; }
    unsigned bits() const noexcept { return order_ * dims_; }
    std::uint64_t theta() const noexcept { return std::uint64_t{1} << bits(); }
    std::uint64_t side() const noexcept { return std::uint64_t{1} << order_; }

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    unsigned order_;
    unsigned dims_;
};

/// Position along the curve, in [0, theta).
struct CurveDistance {
    std::uint64_t value = 0;

    friend bool operator==(const CurveDistance&, const CurveDistance&) = default;
};

/// Grid cell visited by the curve; one coordinate per dimension, each < side.
struct CurvePoint {
    std::vector<std::uint64_t> coords;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Total number of curve points, 2^(order * dims).
std::uint64_t compute_theta(const CurveParams& params);

/// Coordinates of the d-th point along the curve.
///
/// The n = order * dims bit big-endian representation of `d` is dealt out
/// round-robin over the components (string index i goes to component
/// i % dims, so for two dimensions the even positions form the first
/// component and the odd positions the second). The components then pass
/// through gray_transform and refine.
///
/// Throws domain_error when d.value >= theta.
CurvePoint point_from_distance(CurveDistance d, const CurveParams& params);

/// Inverse of point_from_distance. Throws domain_error for a point outside
/// the grid or with the wrong number of coordinates.
CurveDistance distance_from_point(const CurvePoint& pt, const CurveParams& params);

/// Global Gray-code fold over the components:
///   r = C[N-1] >> 1;  C[i] ^= C[i-1] for i = N-1 .. 1;  C[0] ^= r.
std::vector<std::uint64_t> gray_transform(std::span<const std::uint64_t> components,
                                          const CurveParams& params);

/// Undoes the excess exchanges and inversions left by gray_transform.
///
/// For q = 2, 4, ... while q != 2^order, and for each component i from N-1
/// down to 0: when bit q of g[i] is set the low bits (mask q-1) of g[0] are
/// inverted, otherwise the masked low bits of g[0] and g[i] are swapped.
CurvePoint refine(std::span<const std::uint64_t> gray_components, const CurveParams& params);

/// Scalar reflected binary Gray code, x ^ (x >> 1).
constexpr std::uint64_t gray_code(std::uint64_t x) noexcept { return x ^ (x >> 1); }

/// Inverse of gray_code.
constexpr std::uint64_t inverse_gray_code(std::uint64_t g) noexcept {
    for (unsigned shift = 1; shift < 64; shift <<= 1) {
        g ^= g >> shift;
    }
    return g;
}

}  // namespace hilbertimg

#include "hilbertimg/hilbert.hpp"

#include "hilbertimg/errors.hpp"

#include <string>

namespace hilbertimg {

namespace {

void check_components(std::span<const std::uint64_t> components, const CurveParams& params,
                      const char* what) {
    if (components.size() != params.dims()) {
        throw domain_error(std::string(what) + ": expected " + std::to_string(params.dims()) +
                           " components, got " + std::to_string(components.size()));
    }
    for (std::uint64_t c : components) {
        if (c >= params.side()) {
            throw domain_error(std::string(what) + ": component " + std::to_string(c) +
                               " outside [0, " + std::to_string(params.side()) + ")");
        }
    }
}

}  // namespace

CurveParams::CurveParams(unsigned order, unsigned dims) : order_(order), dims_(dims) {
    if (order == 0 || dims == 0) {
        throw domain_error("curve order and dimension count must be at least 1");
    }
    // Guard the product itself against wrap-around before comparing.
    if (order > max_curve_bits || dims > max_curve_bits || order * dims > max_curve_bits) {
        throw sizing_error("order * dims = " + std::to_string(std::uint64_t{order} * dims) +
                           " exceeds the limit of " + std::to_string(max_curve_bits) +
                           " bits for curve point counts");
    }
}

std::uint64_t compute_theta(const CurveParams& params) { return params.theta(); }

std::vector<std::uint64_t> gray_transform(std::span<const std::uint64_t> components,
                                          const CurveParams& params) {
    check_components(components, params, "gray_transform");
    std::vector<std::uint64_t> c(components.begin(), components.end());
    const std::size_t n = c.size();
    const std::uint64_t r = c[n - 1] >> 1;
    for (std::size_t i = n - 1; i > 0; --i) {
        c[i] ^= c[i - 1];
    }
    c[0] ^= r;
    return c;
}

CurvePoint refine(std::span<const std::uint64_t> gray_components, const CurveParams& params) {
    check_components(gray_components, params, "refine");
    std::vector<std::uint64_t> g(gray_components.begin(), gray_components.end());
    const std::uint64_t stop = std::uint64_t{2} << (params.order() - 1);
    for (std::uint64_t q = 2; q != stop; q <<= 1) {
        const std::uint64_t low = q - 1;
        for (std::size_t i = g.size(); i-- > 0;) {
            if (g[i] & q) {
                g[0] ^= low;
            } else {
                const std::uint64_t t = (g[0] ^ g[i]) & low;
                g[0] ^= t;
                g[i] ^= t;
            }
        }
    }
    return CurvePoint{std::move(g)};
}

CurvePoint point_from_distance(CurveDistance d, const CurveParams& params) {
    if (d.value >= params.theta()) {
        throw domain_error("distance " + std::to_string(d.value) + " outside [0, " +
                           std::to_string(params.theta()) + ")");
    }
    const unsigned n = params.bits();
    const unsigned dims = params.dims();
    std::vector<std::uint64_t> components(dims, 0);
    // String position 0 is the most significant bit.
    for (unsigned pos = 0; pos < n; ++pos) {
        const std::uint64_t bit = (d.value >> (n - 1 - pos)) & 1u;
        std::uint64_t& c = components[pos % dims];
        c = (c << 1) | bit;
    }
    const auto gray = gray_transform(components, params);
    return refine(gray, params);
}

CurveDistance distance_from_point(const CurvePoint& pt, const CurveParams& params) {
    check_components(pt.coords, params, "distance_from_point");
    std::vector<std::uint64_t> x = pt.coords;
    const std::size_t dims = x.size();
    const std::uint64_t top = std::uint64_t{1} << (params.order() - 1);

    // Replay the refinement backwards, from the highest level down.
    for (std::uint64_t q = top; q > 1; q >>= 1) {
        const std::uint64_t low = q - 1;
        for (std::size_t i = 0; i < dims; ++i) {
            if (x[i] & q) {
                x[0] ^= low;
            } else {
                const std::uint64_t t = (x[0] ^ x[i]) & low;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }

    // Gray encode.
    for (std::size_t i = 1; i < dims; ++i) {
        x[i] ^= x[i - 1];
    }
    std::uint64_t t = 0;
    for (std::uint64_t q = top; q > 1; q >>= 1) {
        if (x[dims - 1] & q) {
            t ^= q - 1;
        }
    }
    for (auto& c : x) {
        c ^= t;
    }

    // Re-interleave: component i % dims supplies string position i.
    const unsigned n = params.bits();
    const unsigned order = params.order();
    std::uint64_t d = 0;
    for (unsigned pos = 0; pos < n; ++pos) {
        const unsigned level = pos / static_cast<unsigned>(dims);
        const std::uint64_t bit = (x[pos % dims] >> (order - 1 - level)) & 1u;
        d = (d << 1) | bit;
    }
    return CurveDistance{d};
}

}  // namespace hilbertimg

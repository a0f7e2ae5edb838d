#pragma once

// Shared fixture rings for the test suite.

#include <memory>
#include <string>
#include <vector>

#include <socle/ideal.hpp>

namespace fixtures {

using RingPtr = std::shared_ptr<const socle::RingDescriptor>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> rels,
                         socle::fp_t p = 32003) {
    return std::make_shared<socle::RingDescriptor>(
        socle::RingDescriptor::parse(p, std::move(vars), rels));
}

inline socle::Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens,
                             bool of_R = true) {
    std::vector<socle::Polynomial> ps;
    for (const auto& s : gens) ps.push_back(R->parse_poly(s));
    return socle::make_ideal(R, std::move(ps), of_R);
}

// R = S/(xw, yw, zw), the mixed-dimension example ring
inline RingPtr paper_ring() { return make_ring({"x", "y", "z", "w"}, {"x*w", "y*w", "z*w"}); }

// two planes meeting at a point: k[x,y,u,v]/(xu, xv, yu, yv)
inline RingPtr two_planes() {
    return make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
}

// quadric hypersurface k[x,y,z]/(y^2 - xz)
inline RingPtr hypersurface() { return make_ring({"x", "y", "z"}, {"y^2 - x*z"}); }

// monomial curve k[t^3, t^4, t^5]; weighted grading (3,4,5)
inline RingPtr monomial_curve() {
    return make_ring({"x", "y", "z"}, {"y^2 - x*z", "y*z - x^3", "z^2 - x^2*y"});
}

// non-saturated fixture k[x,y]/(x^2, xy): H^0 = (x), dim 1
inline RingPtr nonsat() { return make_ring({"x", "y"}, {"x^2", "x*y"}); }

// regular ring k[x,y]
inline RingPtr regular2() { return make_ring({"x", "y"}, {}); }

} // namespace fixtures

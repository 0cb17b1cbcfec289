#pragma once

#include <string>
#include <vector>

#include "extclosure/algebra.hpp"

namespace rings {

inline extclosure::PresentedAlgebra make(std::uint32_t p, std::vector<std::string> vars,
                                         const std::vector<std::string>& relations) {
    return extclosure::from_presentation(extclosure::PolynomialRing{p, std::move(vars)}, relations);
}

inline extclosure::PresentedAlgebra dual_numbers() { return make(2, {"x"}, {"x^2"}); }
inline extclosure::PresentedAlgebra chain(std::uint32_t p, unsigned n) { return make(p, {"x"}, {"x^" + std::to_string(n)}); }
inline extclosure::PresentedAlgebra small_maximal() { return make(2, {"x", "y"}, {"x^2", "xy", "y^2"}); }
inline extclosure::PresentedAlgebra small_maximal_y3() { return make(2, {"x", "y"}, {"x^2", "xy", "y^3"}); }
inline extclosure::PresentedAlgebra tensor_square() { return make(2, {"x", "y"}, {"x^2", "y^2"}); }
inline extclosure::PresentedAlgebra gorenstein4() {
    return make(2, {"x", "y", "z", "w"}, {"x^2", "xy", "xz-yw", "xw", "y^2", "yz", "z^2", "zw", "w^2"});
}
inline extclosure::PresentedAlgebra stretched() {
    return make(3, {"x", "y", "z"}, {"xy", "xz", "yz", "x^3-y^2", "x^3-z^2"});
}

}  // namespace rings

#include "germ/poly.hpp"

#include <sstream>

namespace germ {

std::string monomial_str(const Monomial& m, const RingSpec& ring) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.var_name(i);
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Poly::str() const {
    if (is_null()) return "<null>";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (m.is_constant()) {
            os << a.str();
        } else if (a.is_one()) {
            os << monomial_str(m, *ring_);
        } else {
            os << a.str() << "*" << monomial_str(m, *ring_);
        }
        first = false;
    }
    return os.str();
}

}  // namespace germ

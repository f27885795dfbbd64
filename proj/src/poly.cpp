#include "galepoly/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace galepoly {

namespace {
const Int kZero = 0;
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::variable() { return monomial(1); }

IntPoly IntPoly::monomial(int deg, Int c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

int IntPoly::degree() const {
    assert(!c_.empty() && "degree of the zero polynomial is undefined");
    return static_cast<int>(c_.size()) - 1;
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) {
    a += b;
    return a;
}

IntPoly operator-(IntPoly a, const IntPoly& b) {
    a -= b;
    return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Int> prod(ca.size() + cb.size() - 1, Int(0));
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
    }
    return IntPoly(std::move(prod));
}

IntPoly shift(const IntPoly& p, const Int& a) {
    if (p.is_zero()) return p;
    // Horner: p(t+a) = (...(c_d (t+a) + c_{d-1})(t+a) + ...) + c_0
    const auto& c = p.coeffs();
    IntPoly res;
    for (int i = p.degree(); i >= 0; --i) {
        // res = res*(t+a) + c_i
        std::vector<Int> next(res.coeffs().size() + 1, Int(0));
        const auto& rc = res.coeffs();
        for (std::size_t j = 0; j < rc.size(); ++j) {
            next[j + 1] += rc[j];
            next[j] += rc[j] * a;
        }
        if (next.empty()) next.push_back(Int(0));
        next[0] += c[i];
        res = IntPoly(std::move(next));
    }
    return res;
}

IntPoly p_poly(long m) {
    if (m <= 0) return IntPoly();
    return IntPoly(std::vector<Int>(m, Int(1)));
}

IntPoly pow(const IntPoly& p, unsigned e) {
    IntPoly res = IntPoly::constant(1);
    IntPoly base = p;
    while (e) {
        if (e & 1) res *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return res;
}

bool is_palindromic(const IntPoly& p) {
    const auto& c = p.coeffs();
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (c[i] != c[n - 1 - i]) return false;
    return true;
}

IntPoly g_from_h(const IntPoly& h, int D) {
    if (!h.is_zero() && D < h.degree())
        throw std::invalid_argument("g_from_h: ambient degree below deg(h)");
    if (D < 0) throw std::invalid_argument("g_from_h: negative ambient degree");
    std::vector<Int> g(D / 2 + 1, Int(0));
    for (int i = 0; i <= D / 2; ++i) g[i] = h.coeff(i) - h.coeff(i - 1);
    return IntPoly(std::move(g));
}

Int binomial(long n, long m) {
    if (m < 0 || m > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return b;
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0)
            os << v;
        else {
            if (v != 1 && v != -1)
                os << v << "*";
            else if (v == -1)
                os << "-";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace galepoly

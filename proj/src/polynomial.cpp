#include "zqcode/polynomial.hpp"

#include <sstream>

#include "zqcode/errors.hpp"

namespace zqcode {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& value) {
    UniPoly p;
    if (value != 0) p.c_.push_back(value);
    return p;
}

UniPoly UniPoly::monomial(const Rational& coeff, int degree) {
    UniPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

Rational UniPoly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(deg)];
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool UniPoly::is_integral() const {
    for (const auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

bool UniPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] -= other.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rational> out(c_.size() + other.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& factor) const {
    if (factor == 0) return UniPoly();
    std::vector<Rational> out(c_);
    for (auto& c : out) c *= factor;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(int degrees) const {
    if (is_zero() || degrees == 0) return *this;
    std::vector<Rational> out(c_.size() + static_cast<std::size_t>(degrees), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + degrees] = c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::divided_by_t() const {
    if (is_zero()) return UniPoly();
    if (c_[0] != 0) throw consistency_error("polynomial not divisible by t: " + str());
    return UniPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

UniPoly operator*(const Rational& factor, const UniPoly& p) { return p.scaled(factor); }

namespace {

// Renders |coeff| * var^deg; the sign is handled by the caller.
std::string term_str(const Rational& coeff_abs, int deg, const std::string& var) {
    std::ostringstream os;
    const bool unit = coeff_abs == 1;
    if (deg == 0 || !unit) os << coeff_abs.get_str();
    if (deg > 0) {
        if (!unit) os << "*";
        os << var;
        if (deg > 1) os << "^" << deg;
    }
    return os.str();
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = c_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_str(abs(c), d, var);
    }
    return os.str();
}

BiPoly BiPoly::monomial(const Rational& coeff, int dx, int dy) {
    BiPoly p;
    p.add_term(dx, dy, coeff);
    return p;
}

void BiPoly::add_term(int dx, int dy, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find({dx, dy});
    if (it == terms_.end()) {
        terms_.emplace(Key{dx, dy}, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational BiPoly::coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [key, coeff] : terms_)
        acc += coeff * pow_rational(x, static_cast<unsigned long>(key.first)) *
               pow_rational(y, static_cast<unsigned long>(key.second));
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
    BiPoly out(*this);
    for (const auto& [key, coeff] : other.terms_) out.add_term(key.first, key.second, coeff);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& other) const {
    BiPoly out(*this);
    for (const auto& [key, coeff] : other.terms_) out.add_term(key.first, key.second, -coeff);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
    BiPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::scaled(const Rational& factor) const {
    BiPoly out;
    if (factor == 0) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * factor);
    return out;
}

std::string BiPoly::str(const std::string& x, const std::string& y) const {
    if (terms_.empty()) return "0";
    // Sort by total degree then x-degree descending, the usual display order.
    std::vector<std::pair<Key, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : ordered) {
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        const Rational a = abs(coeff);
        const bool unit = a == 1;
        const bool has_var = key.first > 0 || key.second > 0;
        if (!unit || !has_var) os << a.get_str();
        bool need_star = !unit;
        auto put = [&](const std::string& var, int deg) {
            if (deg == 0) return;
            if (need_star) os << "*";
            os << var;
            if (deg > 1) os << "^" << deg;
            need_star = true;
        };
        put(x, key.first);
        put(y, key.second);
    }
    return os.str();
}

}  // namespace zqcode

#include "premon/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace premon {

NCPolynomial NCPolynomial::constant(const Rat& c) {
    NCPolynomial p;
    p.add_term({}, c);
    return p;
}

NCPolynomial NCPolynomial::generator(const std::string& name) {
    NCPolynomial p;
    p.add_term({name}, Rat(1));
    return p;
}

void NCPolynomial::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    NCPolynomial r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
    NCPolynomial r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    NCPolynomial r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPolynomial NCPolynomial::operator*(const Rat& s) const {
    NCPolynomial r;
    if (s == 0) return r;
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
}

NCPolynomial NCPolynomial::pow(unsigned int e) const {
    NCPolynomial r = one();
    for (unsigned int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string NCPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (const auto& g : w) os << "*" << g;
        if (w.empty()) os << "*I";
    }
    return os.str();
}

TensorElement TensorElement::unit(std::size_t legs) {
    TensorElement t(legs);
    t.add_term(std::vector<NCPolynomial>(legs, NCPolynomial::one()), Rat(1));
    return t;
}

void TensorElement::add_term(const std::vector<NCPolynomial>& legs, const Rat& c) {
    if (legs.size() != legs_) throw std::invalid_argument("tensor term: wrong leg count");
    if (c == 0) return;
    for (const auto& p : legs)
        if (p.is_zero()) return;
    auto it = terms_.find(legs);
    if (it == terms_.end()) {
        terms_.emplace(legs, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (legs_ != o.legs_) throw std::invalid_argument("tensor add: leg mismatch");
    TensorElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    if (legs_ != o.legs_) throw std::invalid_argument("tensor sub: leg mismatch");
    TensorElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (legs_ != o.legs_) throw std::invalid_argument("tensor mul: leg mismatch");
    TensorElement r(legs_);
    for (const auto& [t1, c1] : terms_)
        for (const auto& [t2, c2] : o.terms_) {
            std::vector<NCPolynomial> t(legs_);
            for (std::size_t i = 0; i < legs_; ++i) t[i] = t1[i] * t2[i];
            r.add_term(t, c1 * c2);
        }
    return r;
}

TensorElement TensorElement::operator*(const Rat& s) const {
    TensorElement r(legs_);
    if (s == 0) return r;
    for (const auto& [t, c] : terms_) r.add_term(t, c * s);
    return r;
}

TensorElement TensorElement::delta_at(std::size_t leg) const {
    if (leg >= legs_) throw std::out_of_range("delta_at: leg out of range");
    TensorElement r(legs_ + 1);
    for (const auto& [t, c] : terms_) {
        TensorElement d = coproduct(t[leg]);
        for (const auto& [dt, dc] : d.terms()) {
            std::vector<NCPolynomial> nt;
            nt.reserve(legs_ + 1);
            for (std::size_t i = 0; i < leg; ++i) nt.push_back(t[i]);
            nt.push_back(dt[0]);
            nt.push_back(dt[1]);
            for (std::size_t i = leg + 1; i < legs_; ++i) nt.push_back(t[i]);
            r.add_term(nt, c * dc);
        }
    }
    return r;
}

TensorElement TensorElement::insert_unit(std::size_t position) const {
    if (position > legs_) throw std::out_of_range("insert_unit: position out of range");
    TensorElement r(legs_ + 1);
    for (const auto& [t, c] : terms_) {
        std::vector<NCPolynomial> nt = t;
        nt.insert(nt.begin() + static_cast<std::ptrdiff_t>(position), NCPolynomial::one());
        r.add_term(nt, c);
    }
    return r;
}

TensorElement TensorElement::permute(const std::vector<std::size_t>& perm) const {
    if (perm.size() != legs_) throw std::invalid_argument("permute: wrong permutation size");
    TensorElement r(legs_);
    for (const auto& [t, c] : terms_) {
        std::vector<NCPolynomial> nt(legs_);
        for (std::size_t i = 0; i < legs_; ++i) nt[perm[i]] = t[i];
        r.add_term(nt, c);
    }
    return r;
}

TensorElement TensorElement::map_legs(NCPolynomial (*f)(const NCPolynomial&)) const {
    TensorElement r(legs_);
    for (const auto& [t, c] : terms_) {
        std::vector<NCPolynomial> nt(legs_);
        for (std::size_t i = 0; i < legs_; ++i) nt[i] = f(t[i]);
        r.add_term(nt, c);
    }
    return r;
}

TensorElement TensorElement::transpose_legs() const {
    TensorElement r(legs_);
    for (const auto& [t, c] : terms_) {
        std::vector<NCPolynomial> nt(t.rbegin(), t.rend());
        r.add_term(nt, c);
    }
    return r;
}

TensorElement coproduct(const NCPolynomial& p) {
    TensorElement r(2);
    for (const auto& [w, c] : p.terms()) {
        // Delta(x1...xk) = prod of (x_i (x) I + I (x) x_i)
        TensorElement acc = TensorElement::unit(2);
        for (const auto& g : w) {
            TensorElement d(2);
            d.add_term({NCPolynomial::generator(g), NCPolynomial::one()}, Rat(1));
            d.add_term({NCPolynomial::one(), NCPolynomial::generator(g)}, Rat(1));
            acc = acc * d;
        }
        r = r + acc * c;
    }
    return r;
}

NCPolynomial antipode(const NCPolynomial& p) {
    NCPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        Word rev(w.rbegin(), w.rend());
        Rat sign = (w.size() % 2 == 0) ? Rat(1) : Rat(-1);
        r.add_term(rev, c * sign);
    }
    return r;
}

Rat counit(const NCPolynomial& p) {
    auto it = p.terms().find(Word{});
    return it == p.terms().end() ? Rat(0) : it->second;
}

} // namespace premon

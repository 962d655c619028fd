#ifndef PREMON_NCPOLY_HPP
#define PREMON_NCPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "premon/rational.hpp"

namespace premon {

// Word in the generators; the empty word is the algebra unit I.
using Word = std::vector<std::string>;

// Element of U(g): rational combination of noncommutative words.
// No PBW normal ordering; equality of algebra elements is only ever
// tested after evaluation on modules.
class NCPolynomial {
public:
    NCPolynomial() = default;

    static NCPolynomial zero() { return NCPolynomial(); }
    static NCPolynomial one() { return constant(Rat(1)); }
    static NCPolynomial constant(const Rat& c);
    static NCPolynomial generator(const std::string& name);

    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Rat& c);

    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator*(const NCPolynomial& o) const;
    NCPolynomial operator*(const Rat& s) const;
    NCPolynomial operator-() const { return *this * Rat(-1); }
    NCPolynomial pow(unsigned int e) const;

    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator<(const NCPolynomial& o) const { return terms_ < o.terms_; }

    std::string str() const;

private:
    std::map<Word, Rat> terms_;
};

// Element of U(g)^{tensor n}: rational combination of pure tensors.
class TensorElement {
public:
    explicit TensorElement(std::size_t legs) : legs_(legs) {}

    static TensorElement unit(std::size_t legs);

    std::size_t legs() const { return legs_; }
    const std::map<std::vector<NCPolynomial>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<NCPolynomial>& legs, const Rat& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  // componentwise leg products
    TensorElement operator*(const Rat& s) const;

    // Replace leg `leg` by its coproduct; result has legs+1 legs.
    TensorElement delta_at(std::size_t leg) const;
    // Insert the unit I as a new leg at `position` (0..legs).
    TensorElement insert_unit(std::size_t position) const;
    // Component i of each pure tensor moves to slot perm[i] (element-to-slot).
    TensorElement permute(const std::vector<std::size_t>& perm) const;
    // Apply a polynomial map (e.g. the antipode) to every leg.
    TensorElement map_legs(NCPolynomial (*f)(const NCPolynomial&)) const;
    // Reverse leg order (opposite coproduct for 2 legs).
    TensorElement transpose_legs() const;

    bool operator==(const TensorElement& o) const {
        return legs_ == o.legs_ && terms_ == o.terms_;
    }

private:
    std::size_t legs_;
    std::map<std::vector<NCPolynomial>, Rat> terms_;
};

// Hopf structure maps of U(g).
TensorElement coproduct(const NCPolynomial& p);
NCPolynomial antipode(const NCPolynomial& p);
Rat counit(const NCPolynomial& p);

} // namespace premon

#endif

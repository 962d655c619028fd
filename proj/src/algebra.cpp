#include "premon/algebra.hpp"

#include <sstream>

#include "premon/stext.hpp"

namespace premon {

LieAlgebraPresentation::LieAlgebraPresentation(
    std::vector<std::string> basis,
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> brackets)
    : basis_(std::move(basis)), brackets_(std::move(brackets)) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (basis_[i] == basis_[j])
                throw AlgebraError("duplicate basis name: " + basis_[i]);

    // Antisymmetry: fill or verify the mirrored entries.
    auto snapshot = brackets_;
    for (const auto& [ij, vec] : snapshot) {
        auto [i, j] = ij;
        if (i >= basis_.size() || j >= basis_.size())
            throw AlgebraError("bracket index out of range");
        if (i == j) {
            for (const auto& [k, c] : vec)
                if (c != 0)
                    throw AlgebraError("nonzero bracket [" + basis_[i] + "," + basis_[i] + "]");
            continue;
        }
        auto it = brackets_.find({j, i});
        if (it == brackets_.end()) {
            std::map<std::size_t, Rat> neg;
            for (const auto& [k, c] : vec) neg[k] = -c;
            brackets_[{j, i}] = std::move(neg);
        } else {
            for (const auto& [k, c] : vec)
                if (it->second.count(k) == 0 || it->second.at(k) != -c)
                    throw AlgebraError("antisymmetry violated for [" + basis_[i] + "," +
                                       basis_[j] + "]");
            for (const auto& [k, c] : it->second)
                if (vec.count(k) == 0 || vec.at(k) != -c)
                    throw AlgebraError("antisymmetry violated for [" + basis_[i] + "," +
                                       basis_[j] + "]");
        }
    }
    check_jacobi();
}

std::size_t LieAlgebraPresentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == name) return i;
    throw AlgebraError("unknown generator: " + name);
}

bool LieAlgebraPresentation::has_generator(const std::string& name) const {
    for (const auto& b : basis_)
        if (b == name) return true;
    return false;
}

std::vector<Rat> LieAlgebraPresentation::bracket(std::size_t i, std::size_t j) const {
    std::vector<Rat> out(basis_.size(), Rat(0));
    auto it = brackets_.find({i, j});
    if (it != brackets_.end())
        for (const auto& [k, c] : it->second) out[k] = c;
    return out;
}

void LieAlgebraPresentation::check_jacobi() const {
    const std::size_t n = basis_.size();
    auto bracket_vec = [&](const std::vector<Rat>& a, std::size_t k) {
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t m = 0; m < n; ++m) {
            if (a[m] == 0) continue;
            auto b = bracket(m, k);
            for (std::size_t t = 0; t < n; ++t) out[t] += a[m] * b[t];
        }
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto t1 = bracket_vec(bracket(i, j), k);
                auto t2 = bracket_vec(bracket(j, k), i);
                auto t3 = bracket_vec(bracket(k, i), j);
                for (std::size_t m = 0; m < n; ++m)
                    if (t1[m] + t2[m] + t3[m] != 0)
                        throw AlgebraError("Jacobi identity fails for triple (" + basis_[i] +
                                           "," + basis_[j] + "," + basis_[k] + ")");
            }
}

ModuleRep::ModuleRep(AlgebraPtr algebra, std::size_t dim,
                     std::map<std::string, RationalMatrix> action, std::string label)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)),
      label_(std::move(label)) {
    if (dim_ == 0) throw AlgebraError("zero-dimensional module rejected: " + label_);
    for (const auto& name : algebra_->basis()) {
        auto it = action_.find(name);
        if (it == action_.end())
            throw AlgebraError("module " + label_ + " missing action for " + name);
        if (it->second.rows() != dim_ || it->second.cols() != dim_)
            throw AlgebraError("module " + label_ + ": bad matrix shape for " + name);
    }
    check_brackets();
}

const RationalMatrix& ModuleRep::action(const std::string& generator) const {
    auto it = action_.find(generator);
    if (it == action_.end())
        throw AlgebraError("unknown symbol " + generator + " on module " + label_);
    return it->second;
}

void ModuleRep::check_brackets() const {
    const auto& basis = algebra_->basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& a = action_.at(basis[i]);
            const auto& b = action_.at(basis[j]);
            RationalMatrix comm = a * b - b * a;
            RationalMatrix expect(dim_, dim_);
            auto vec = algebra_->bracket(i, j);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (vec[k] != 0) expect = expect + action_.at(basis[k]) * vec[k];
            if (comm != expect)
                throw AlgebraError("module " + label_ + " violates bracket [" + basis[i] +
                                   "," + basis[j] + "]");
        }
}

AlgebraPtr load_algebra(const std::string& presentation_text) {
    auto sections = parse_stext(presentation_text);
    const STextSection* alg = nullptr;
    for (const auto& s : sections)
        if (s.name == "algebra") alg = &s;
    if (!alg) throw AlgebraError("presentation text has no [algebra] section");

    std::vector<std::string> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> brackets;
    for (const auto& e : alg->entries) {
        if (e.key == "name") continue;  // allow a display name
        if (e.key == "basis") {
            if (e.value.kind != STextValue::Kind::List)
                throw AlgebraError("basis must be a list");
            basis = e.value.list;
        }
    }
    if (basis.empty()) throw AlgebraError("presentation defines no basis");
    auto idx = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == name) return i;
        throw AlgebraError("bracket references unknown generator: " + name);
    };
    for (const auto& e : alg->entries) {
        if (e.key.rfind("bracket.", 0) != 0) continue;
        std::string pair = e.key.substr(8);
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw AlgebraError("bracket key must name a pair: " + e.key);
        std::size_t i = idx(pair.substr(0, comma));
        std::size_t j = idx(pair.substr(comma + 1));
        if (e.value.kind != STextValue::Kind::Map)
            throw AlgebraError("bracket value must be a map: " + e.key);
        std::map<std::size_t, Rat> vec;
        for (const auto& [k, v] : e.value.map) vec[idx(k)] = parse_rational(v);
        brackets[{i, j}] = std::move(vec);
    }
    return std::make_shared<LieAlgebraPresentation>(std::move(basis), std::move(brackets));
}

AlgebraPtr builtin_gl1() {
    static AlgebraPtr a = std::make_shared<LieAlgebraPresentation>(
        std::vector<std::string>{"N"},
        std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>>{});
    return a;
}

AlgebraPtr builtin_sl2() {
    static AlgebraPtr a = [] {
        std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> br;
        // basis order e, h, f
        br[{1, 0}] = {{0, Rat(2)}};    // [h,e] = 2e
        br[{1, 2}] = {{2, Rat(-2)}};   // [h,f] = -2f
        br[{0, 2}] = {{1, Rat(1)}};    // [e,f] = h
        return std::make_shared<LieAlgebraPresentation>(
            std::vector<std::string>{"e", "h", "f"}, std::move(br));
    }();
    return a;
}

ModuleRep build_gl1_module(long n) {
    RationalMatrix m(1, 1);
    m.at(0, 0) = n;
    return ModuleRep(builtin_gl1(), 1, {{"N", m}}, "M(" + std::to_string(n) + ")");
}

ModuleRep build_sl2_module(unsigned long two_j) {
    const std::size_t dim = two_j + 1;
    RationalMatrix e(dim, dim), h(dim, dim), f(dim, dim);
    // basis v_0 .. v_{2j}, highest weight first:
    //   h v_k = (2j - 2k) v_k,  f v_k = v_{k+1},  e v_k = k(2j - k + 1) v_{k-1}
    for (std::size_t k = 0; k < dim; ++k) {
        h.at(k, k) = Rat(static_cast<long>(two_j) - 2 * static_cast<long>(k));
        if (k + 1 < dim) f.at(k + 1, k) = 1;
        if (k >= 1)
            e.at(k - 1, k) = Rat(static_cast<long>(k) *
                                 (static_cast<long>(two_j) - static_cast<long>(k) + 1));
    }
    std::string label = (two_j % 2 == 0) ? "V(" + std::to_string(two_j / 2) + ")"
                                         : "V(" + std::to_string(two_j) + "/2)";
    return ModuleRep(builtin_sl2(), dim, {{"e", e}, {"h", h}, {"f", f}}, label);
}

ModuleRep trivial_module(const AlgebraPtr& algebra) {
    std::map<std::string, RationalMatrix> action;
    for (const auto& g : algebra->basis()) action.emplace(g, RationalMatrix(1, 1));
    return ModuleRep(algebra, 1, std::move(action), "1");
}

ModuleRep tensor_modules(const ModuleRep& u, const ModuleRep& v) {
    if (u.algebra() != v.algebra())
        throw AlgebraError("tensor_modules: modules over different algebras");
    std::map<std::string, RationalMatrix> action;
    RationalMatrix iu = RationalMatrix::identity(u.dim());
    RationalMatrix iv = RationalMatrix::identity(v.dim());
    for (const auto& g : u.algebra()->basis())
        action.emplace(g, kron(u.action(g), iv) + kron(iu, v.action(g)));
    return ModuleRep(u.algebra(), u.dim() * v.dim(), std::move(action),
                     "(" + u.label() + "⊗" + v.label() + ")");
}

RationalMatrix evaluate(const NCPolynomial& p, const ModuleRep& v) {
    RationalMatrix out(v.dim(), v.dim());
    for (const auto& [word, coeff] : p.terms()) {
        RationalMatrix m = RationalMatrix::identity(v.dim());
        for (const auto& g : word) m = m * v.action(g);
        out = out + m * coeff;
    }
    return out;
}

RationalMatrix evaluate_legs(const TensorElement& t,
                             const std::vector<const ModuleRep*>& modules) {
    if (t.legs() != modules.size())
        throw AlgebraError("evaluate_legs: leg/module count mismatch");
    std::size_t total = 1;
    for (const auto* m : modules) total *= m->dim();
    RationalMatrix out(total, total);
    for (const auto& [legs, coeff] : t.terms()) {
        RationalMatrix m = evaluate(legs[0], *modules[0]);
        for (std::size_t i = 1; i < legs.size(); ++i)
            m = kron(m, evaluate(legs[i], *modules[i]));
        out = out + m * coeff;
    }
    return out;
}

std::vector<RationalMatrix> intertwiner_basis(const ModuleRep& u, const ModuleRep& v) {
    if (u.algebra() != v.algebra())
        throw AlgebraError("intertwiner_basis: modules over different algebras");
    const std::size_t du = u.dim(), dv = v.dim();
    const auto& gens = u.algebra()->basis();
    RationalMatrix sys(gens.size() * dv * du, dv * du);
    std::size_t row = 0;
    for (const auto& g : gens) {
        const auto& au = u.action(g);
        const auto& av = v.action(g);
        for (std::size_t r = 0; r < dv; ++r)
            for (std::size_t k = 0; k < du; ++k) {
                // (f au - av f)[r][k] = 0, unknowns f[r][c] at index r*du+c
                for (std::size_t c = 0; c < du; ++c) sys.at(row, r * du + c) += au.at(c, k);
                for (std::size_t m = 0; m < dv; ++m) sys.at(row, m * du + k) -= av.at(r, m);
                ++row;
            }
    }
    std::vector<RationalMatrix> basis;
    for (const auto& vec : nullspace(sys)) {
        RationalMatrix f(dv, du);
        for (std::size_t r = 0; r < dv; ++r)
            for (std::size_t c = 0; c < du; ++c) f.at(r, c) = vec[r * du + c];
        basis.push_back(std::move(f));
    }
    return basis;
}

} // namespace premon

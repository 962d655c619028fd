#include "premon/twined.hpp"

#include <sstream>

namespace premon {

namespace {

std::string element_key(const TensorElement& e,
                        const std::vector<const ModuleRep*>& modules) {
    std::ostringstream os;
    for (const auto& [legs, c] : e.terms()) {
        os << rat_str(c) << "(";
        for (const auto& p : legs) os << p.str() << "|";
        os << ")";
    }
    os << "@";
    for (const auto* m : modules) os << m->label() << ",";
    return os.str();
}

std::vector<std::size_t> dims_of(const std::vector<const ModuleRep*>& modules) {
    std::vector<std::size_t> d;
    d.reserve(modules.size());
    for (const auto* m : modules) d.push_back(m->dim());
    return d;
}

TensorElement rtilde_exponent(const NCPolynomial& k) {
    TensorElement e(2);
    e.add_term({k, k}, Rat(1));
    return e;
}

} // namespace

TensorElement kappa_element(const NCPolynomial& k) {
    TensorElement pair(2);
    pair.add_term({NCPolynomial::one(), k}, Rat(1));
    pair.add_term({k, NCPolynomial::one()}, Rat(1));
    pair = pair - coproduct(k);
    TensorElement out(3);
    for (const auto& [legs, c] : pair.terms()) out.add_term({k, legs[0], legs[1]}, c);
    return out;
}

const Spectrum& TwinedData::exponent_spectrum(
    const TensorElement& exponent, const std::vector<const ModuleRep*>& modules) const {
    std::string key = element_key(exponent, modules);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = spectra_.find(key);
        if (it != spectra_.end()) return it->second;
    }
    Spectrum spec = integer_spectrum(evaluate_legs(exponent, modules));
    std::lock_guard<std::mutex> lock(mutex_);
    return spectra_.emplace(key, std::move(spec)).first->second;
}

TensorOperator TwinedData::power(const TensorElement& exponent,
                                 const std::vector<const ModuleRep*>& modules,
                                 bool invert) const {
    const Spectrum& spec = exponent_spectrum(exponent, modules);
    GammaValue g = invert ? gamma_.reciprocal() : gamma_;
    return TensorOperator{dims_of(modules), gamma_power(spec, g)};
}

ValidationReport validate_central(const NCPolynomial& k,
                                  const std::vector<const ModuleRep*>& modules,
                                  bool require_S_odd) {
    ValidationReport rep;
    auto pass = [&](const std::string& line) { rep.passed.push_back(line); };
    auto fail = [&](std::string check, std::string ctx, std::string witness) {
        rep.issues.push_back({std::move(check), std::move(ctx), std::move(witness)});
    };

    Rat eps = counit(k);
    if (eps == 0)
        pass("counit: eps(K) = 0");
    else
        fail("counit", "K", "eps(K) = " + rat_str(eps));

    auto check_central_on = [&](const ModuleRep& m) {
        RationalMatrix km = evaluate(k, m);
        for (const auto& g : m.algebra()->basis()) {
            const auto& a = m.action(g);
            if (km * a != a * km) {
                fail("centrality", m.label(), "generator " + g);
                return;
            }
        }
        pass("centrality: K commutes with the action on " + m.label());
    };

    auto check_spectrum_of = [&](const RationalMatrix& m, const std::string& ctx) {
        try {
            integer_spectrum(m);
            pass("integer_spectrum: " + ctx);
        } catch (const SpectrumError& e) {
            fail(SpectrumError::describe(e.kind), ctx, e.witness);
        }
    };

    for (const auto* m : modules) {
        check_central_on(*m);
        check_spectrum_of(evaluate(k, *m), "K on " + m->label());
    }
    TensorElement dk = coproduct(k);
    for (const auto* u : modules)
        for (const auto* v : modules) {
            ModuleRep uv = tensor_modules(*u, *v);
            check_central_on(uv);
            check_spectrum_of(evaluate_legs(dk, {u, v}), "Delta(K) on " + uv.label());
        }

    if (require_S_odd) {
        NCPolynomial sum = antipode(k) + k;
        for (const auto* m : modules) {
            if (evaluate(sum, *m).is_zero()) {
                pass("S_parity: S(K) = -K on " + m->label());
            } else {
                fail("S_parity", m->label(), "S(K) + K acts as " + evaluate(sum, *m).str());
            }
        }
    }
    return rep;
}

TensorOperator build_kappa(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                           const ModuleRep& w) {
    std::vector<const ModuleRep*> mods{&u, &v, &w};
    return TensorOperator{dims_of(mods),
                          evaluate_legs(kappa_element(t.k_poly()), mods)};
}

Morphism build_phitilde(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                        const ModuleRep& w, bool invert) {
    TensorOperator op = t.power(kappa_element(t.k_poly()), {&u, &v, &w}, invert);
    std::string from = u.label() + "⊗(" + v.label() + "⊗" + w.label() + ")";
    std::string to = "(" + u.label() + "⊗" + v.label() + ")⊗" + w.label();
    if (invert) std::swap(from, to);
    return Morphism{std::move(from), std::move(to), std::move(op)};
}

TensorOperator build_rtilde(const TwinedData& t, const ModuleRep& u, const ModuleRep& v) {
    return t.power(rtilde_exponent(t.k_poly()), {&u, &v});
}

RationalMatrix flip_matrix(std::size_t dim_u, std::size_t dim_v) {
    RationalMatrix f(dim_u * dim_v, dim_u * dim_v);
    for (std::size_t i = 0; i < dim_u; ++i)
        for (std::size_t j = 0; j < dim_v; ++j) f.at(j * dim_u + i, i * dim_v + j) = 1;
    return f;
}

Morphism braiding(const TwinedData& t, const ModuleRep& u, const ModuleRep& v) {
    TensorOperator r = build_rtilde(t, u, v);
    OperatorMatrix m = op_mul(OperatorMatrix(flip_matrix(u.dim(), v.dim())), r.matrix);
    return Morphism{u.label() + "⊗" + v.label(), v.label() + "⊗" + u.label(),
                    TensorOperator{{v.dim(), u.dim()}, std::move(m)}};
}

TensorOperator build_xi(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                        const ModuleRep& w, const ModuleRep& z) {
    std::vector<const ModuleRep*> mods{&u, &v, &w, &z};
    TensorElement kap = kappa_element(t.k_poly());
    OperatorMatrix acc = t.power(kap.delta_at(0), mods, true).matrix;
    acc = op_mul(acc, t.power(kap.insert_unit(3), mods).matrix);
    acc = op_mul(acc, t.power(kap.delta_at(1), mods).matrix);
    acc = op_mul(acc, t.power(kap.insert_unit(0), mods).matrix);
    acc = op_mul(acc, t.power(kap.delta_at(2), mods, true).matrix);
    return TensorOperator{dims_of(mods), std::move(acc)};
}

Morphism q_morphism(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                    const ModuleRep& w, const ModuleRep& z, QMethod method) {
    std::string space = "(" + u.label() + "⊗" + v.label() + ")⊗(" + w.label() + "⊗" +
                        z.label() + ")";
    if (method == QMethod::Xi) {
        TensorOperator op = build_xi(t, u, v, w, z);
        return Morphism{space, space, std::move(op)};
    }
    ModuleRep uv = tensor_modules(u, v);
    ModuleRep vw = tensor_modules(v, w);
    ModuleRep wz = tensor_modules(w, z);
    OperatorMatrix iu = RationalMatrix::identity(u.dim());
    OperatorMatrix iz = RationalMatrix::identity(z.dim());
    OperatorMatrix acc = build_phitilde(t, uv, w, z, true).op.matrix;
    acc = op_mul(acc, op_kron(build_phitilde(t, u, v, w).op.matrix, iz));
    acc = op_mul(acc, build_phitilde(t, u, vw, z).op.matrix);
    acc = op_mul(acc, op_kron(iu, build_phitilde(t, v, w, z).op.matrix));
    acc = op_mul(acc, build_phitilde(t, u, v, wz, true).op.matrix);
    return Morphism{space, space,
                    TensorOperator{{u.dim(), v.dim(), w.dim(), z.dim()}, std::move(acc)}};
}

std::pair<Morphism, Morphism> unit_isos(const TwinedData&, const ModuleRep& u) {
    TensorOperator id{{u.dim()}, RationalMatrix::identity(u.dim())};
    Morphism rho{u.label() + "⊗1", u.label(), id};
    Morphism lambda{"1⊗" + u.label(), u.label(), id};
    return {std::move(rho), std::move(lambda)};
}

} // namespace premon

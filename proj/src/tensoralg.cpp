#include "innertwist/tensoralg.hpp"

#include <sstream>

namespace innertwist {

namespace {

Check make_check(std::string anchor, std::string subject,
                 std::function<CheckOutcome()> fn) {
    Check c;
    c.anchor = std::move(anchor);
    c.subject = std::move(subject);
    c.run = std::move(fn);
    return c;
}

std::string degree_tag(long i, long j) {
    std::ostringstream s;
    s << "(" << i << "," << j << ")";
    return s.str();
}

std::string degree_tag(long i, long j, long k) {
    std::ostringstream s;
    s << "(" << i << "," << j << "," << k << ")";
    return s.str();
}

/// The braided tensor coalgebra on C^(x)i (x) C^(x)j, the source of r_{i,j}.
Coalgebra pair_coalgebra(const TruncatedTensorBialgebra& t, long i, long j) {
    return tensor_coalgebra(t.component(i), t.component(j));
}

/// r_{i,j+k} via the row display
///   r_{i,k} (A_i (x) r_{i,j} (x) A_k)(Delta_i (x) A_j (x) A_k),
/// kept as sparse chains so no Kronecker intermediate is materialized.
GradedMorphism row_recursion(const DiagramBicharacter& bc, long i, long j,
                             long k) {
    const TruncatedTensorBialgebra& t = bc.diagram;
    const ContextPtr& ctx = t.ctx;
    auto id_i = ctx->identity(t.component(i).carrier);
    auto id_j = ctx->identity(t.component(j).carrier);
    auto id_k = ctx->identity(t.component(k).carrier);
    auto paired = compose_tensor(bc.at(i, k), {id_i, bc.at(i, j), id_k});
    return compose_tensor(paired, {t.component(i).delta, id_j, id_k});
}

/// r_{i+j,k} via the column display
///   (r_{i,k} (x) r_{j,k})(A_i (x) sigma_{A_j,A_k} (x) A_k)
///   (A_i (x) A_j (x) Delta_k).
GradedMorphism column_recursion(const DiagramBicharacter& bc, long i, long j,
                                long k) {
    const TruncatedTensorBialgebra& t = bc.diagram;
    const ContextPtr& ctx = t.ctx;
    auto id_i = ctx->identity(t.component(i).carrier);
    auto id_j = ctx->identity(t.component(j).carrier);
    auto id_k = ctx->identity(t.component(k).carrier);
    auto sigma_jk = t.sigma_at(j).at(t.component(k).carrier);
    auto paired = compose_tensor(bc.at(i, k).tensor(bc.at(j, k)),
                                 {id_i, sigma_jk, id_k});
    return compose_tensor(paired, {id_i, id_j, t.component(k).delta});
}

} // namespace

CentralCoalgebra::CentralCoalgebra(Coalgebra c, HalfBraiding s)
    : coalgebra(std::move(c)), sigma(std::move(s)) {
    if (sigma.is_null())
        throw StructuralError("central coalgebra needs a half-braiding");
    if (!(sigma.carrier() == coalgebra.carrier))
        throw StructuralError(
            "half-braiding carrier differs from the coalgebra carrier");
    if (sigma.context() != coalgebra.ctx)
        throw StructuralError(
            "half-braiding and coalgebra live in different contexts");
}

CheckList check_central_coalgebra(const CentralCoalgebra& c,
                                  const std::string& subject,
                                  const std::vector<Coalgebra>& tests,
                                  const std::vector<NamedMorphism>& naturality) {
    CheckList out;
    const Coalgebra& co = c.coalgebra;
    const ContextPtr ctx = co.ctx;
    const HalfBraiding sigma = c.sigma;

    for (const Coalgebra& test : tests) {
        const GradedObject d = test.carrier;
        const std::string tag = subject + " [D=" + d.name() + "]";

        out.push_back(make_check("Z1", tag, [co, test, sigma] {
            auto s = sigma.at(test.carrier);
            Coalgebra cd = tensor_coalgebra(co, test);
            Coalgebra dc = tensor_coalgebra(test, co);
            auto comult =
                expect_equal(dc.delta * s, tensor_compose({s, s}, cd.delta));
            if (!comult.passed) return comult;
            return expect_equal(dc.counit * s, cd.counit);
        }));

        std::vector<NamedMorphism> family = naturality;
        family.push_back({"Delta_" + d.name(), test.delta});
        family.push_back({"counit_" + d.name(), test.counit});
        out.push_back(make_check("Z2", tag, [ctx, co, sigma, family] {
            for (const NamedMorphism& nf : family) {
                const GradedMorphism& f = nf.morphism;
                auto lhs = sigma.at(f.target()) *
                           ctx->identity(co.carrier).tensor(f);
                auto rhs = f.tensor(ctx->identity(co.carrier)) *
                           sigma.at(f.source());
                auto r = expect_equal(lhs, rhs);
                if (!r.passed) {
                    r.detail = "naturality against " + nf.name + ": " + r.detail;
                    return r;
                }
            }
            return CheckOutcome{true, ""};
        }));

        out.push_back(make_check("Z3", tag, [sigma, d] {
            return expect_true(sigma.try_inverse_at(d).has_value(),
                               "sigma component is singular");
        }));
    }
    return out;
}

CheckList check_central_coalgebra(const CentralCoalgebra& c,
                                  const std::string& subject) {
    return check_central_coalgebra(c, subject, {c.coalgebra}, {});
}

const Coalgebra& TruncatedTensorBialgebra::component(long k) const {
    if (k < 0 || k > degree)
        throw StructuralError("tensor power " + std::to_string(k) +
                              " is outside the degree bound " +
                              std::to_string(degree));
    return components[static_cast<std::size_t>(k)];
}

const HalfBraiding& TruncatedTensorBialgebra::sigma_at(long k) const {
    if (k < 0 || k > degree)
        throw StructuralError("tensor power " + std::to_string(k) +
                              " is outside the degree bound " +
                              std::to_string(degree));
    return sigmas[static_cast<std::size_t>(k)];
}

GradedMorphism TruncatedTensorBialgebra::concat(long i, long j) const {
    if (i < 0 || j < 0 || i + j > degree)
        throw StructuralError("concatenation " + degree_tag(i, j) +
                              " is outside the degree bound " +
                              std::to_string(degree));
    return ctx->identity(component(i + j).carrier);
}

TruncatedTensorBialgebra truncated_tensor_bialgebra(const CentralCoalgebra& c,
                                                    long degree) {
    if (degree < 1)
        throw StructuralError("degree bound must be at least 1");
    TruncatedTensorBialgebra t{c.context(), degree, c, {}, {}};
    const ContextPtr& ctx = t.ctx;
    GradedObject unit;
    auto id_unit = ctx->identity(unit);
    t.components.push_back(Coalgebra(ctx, unit, id_unit, id_unit));
    t.sigmas.push_back(HalfBraiding::tautological(ctx, unit));
    t.components.push_back(c.coalgebra);
    t.sigmas.push_back(c.sigma);
    for (long k = 2; k <= degree; ++k) {
        t.components.push_back(
            tensor_coalgebra(t.components.back(), c.coalgebra));
        t.sigmas.push_back(tensor_half_braiding(t.sigmas.back(), c.sigma));
    }
    return t;
}

CheckList check_truncated_tensor_bialgebra(const TruncatedTensorBialgebra& t,
                                           const std::string& subject) {
    CheckList out;
    const ContextPtr ctx = t.ctx;
    const Coalgebra probe = t.seed.coalgebra;

    for (long k = 0; k <= t.degree; ++k) {
        CheckList axioms = check_coalgebra(
            t.component(k), subject + " degree " + std::to_string(k));
        out.insert(out.end(), std::make_move_iterator(axioms.begin()),
                   std::make_move_iterator(axioms.end()));
    }

    for (long i = 0; i <= t.degree; ++i) {
        for (long j = 0; i + j <= t.degree; ++j) {
            const std::string tag = subject + " " + degree_tag(i, j);
            Coalgebra piecewise = pair_coalgebra(t, i, j);
            Coalgebra whole = t.component(i + j);
            out.push_back(make_check(
                "concatenation compatibility", tag, [piecewise, whole] {
                    auto comult = expect_equal(piecewise.delta, whole.delta);
                    if (!comult.passed) return comult;
                    return expect_equal(piecewise.counit, whole.counit);
                }));
        }
    }

    for (long k = 0; k <= t.degree; ++k) {
        const std::string tag = subject + " degree " + std::to_string(k);
        HalfBraiding sigma = t.sigma_at(k);
        GradedObject carrier = t.component(k).carrier;
        GradedObject c1 = probe.carrier;
        out.push_back(make_check("Z4", tag, [ctx, sigma, carrier, c1, k] {
            auto at_unit =
                expect_equal(sigma.at(GradedObject()), ctx->identity(carrier));
            if (!at_unit.passed) return at_unit;
            if (k > 0) return CheckOutcome{true, ""};
            return expect_equal(sigma.at(c1), ctx->identity(c1));
        }));
    }

    for (long i = 1; i <= t.degree; ++i) {
        for (long j = 1; i + j <= t.degree; ++j) {
            const std::string tag = subject + " " + degree_tag(i, j);
            HalfBraiding whole = t.sigma_at(i + j);
            HalfBraiding left = t.sigma_at(i);
            HalfBraiding right = t.sigma_at(j);
            GradedObject ci = t.component(i).carrier;
            GradedObject cj = t.component(j).carrier;
            GradedObject c1 = probe.carrier;
            out.push_back(make_check(
                "Z5", tag, [ctx, whole, left, right, ci, cj, c1] {
                    auto split = left.at(c1).tensor(ctx->identity(cj)) *
                                 ctx->identity(ci).tensor(right.at(c1));
                    return expect_equal(whole.at(c1), split);
                }));
        }
    }

    for (long k = 0; k <= t.degree; ++k) {
        CheckList central = check_central_coalgebra(
            CentralCoalgebra(t.component(k), t.sigma_at(k)),
            subject + " degree " + std::to_string(k), {probe}, {});
        out.insert(out.end(), std::make_move_iterator(central.begin()),
                   std::make_move_iterator(central.end()));
    }
    return out;
}

const GradedMorphism& DiagramBicharacter::at(long i, long j) const {
    if (i < 0 || j < 0 || i > diagram.degree || j > diagram.degree)
        throw StructuralError("pairing index " + degree_tag(i, j) +
                              " is outside the table");
    return pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const GradedMorphism& DiagramBicharacter::inverse_at(long i, long j) const {
    if (i < 0 || j < 0 || i > diagram.degree || j > diagram.degree)
        throw StructuralError("pairing index " + degree_tag(i, j) +
                              " is outside the table");
    return pairing_inverse[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(j)];
}

DiagramBicharacter extend_bicharacter(const CentralCoalgebra& c,
                                      const GradedMorphism& seed,
                                      long degree) {
    GradedObject square = c.carrier().tensor(c.carrier());
    if (!(seed.source() == square) || !(seed.target() == GradedObject()))
        throw StructuralError("seed pairing must be a functional on " +
                              square.name() + ", got " +
                              seed.source().name() + " -> " +
                              seed.target().name());
    DiagramBicharacter bc{truncated_tensor_bialgebra(c, degree), {}, {}};
    const TruncatedTensorBialgebra& t = bc.diagram;
    const std::size_t n = static_cast<std::size_t>(degree);
    bc.pairing.assign(n + 1, std::vector<GradedMorphism>(n + 1));
    bc.pairing_inverse.assign(n + 1, std::vector<GradedMorphism>(n + 1));

    for (long k = 0; k <= degree; ++k) {
        bc.pairing[0][static_cast<std::size_t>(k)] = t.component(k).counit;
        bc.pairing[static_cast<std::size_t>(k)][0] = t.component(k).counit;
    }
    bc.pairing[1][1] = seed;
    for (long i = 2; i <= degree; ++i)
        bc.pairing[static_cast<std::size_t>(i)][1] =
            column_recursion(bc, i - 1, 1, 1);
    for (long i = 1; i <= degree; ++i)
        for (long j = 2; j <= degree; ++j)
            bc.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                j)] = row_recursion(bc, i, j - 1, 1);

    for (long i = 0; i <= degree; ++i) {
        for (long j = 0; j <= degree; ++j) {
            auto inv = convolution_inverse(pair_coalgebra(t, i, j),
                                           bc.at(i, j));
            if (!inv)
                throw StructuralError("pairing entry " + degree_tag(i, j) +
                                      " is not convolution-invertible");
            bc.pairing_inverse[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)] = *inv;
        }
    }
    return bc;
}

CheckList check_bicharacter(const DiagramBicharacter& bc,
                            const std::string& subject) {
    CheckList out;
    auto hold = std::make_shared<const DiagramBicharacter>(bc);
    const long n = hold->diagram.degree;

    out.push_back(make_check("bicharacter (rows)", subject, [hold, n] {
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j)
                for (long k = 0; j + k <= n; ++k) {
                    auto r = expect_equal(hold->at(i, j + k),
                                          row_recursion(*hold, i, j, k));
                    if (!r.passed) {
                        r.detail = "split " + degree_tag(i, j, k) + ": " +
                                   r.detail;
                        return r;
                    }
                }
        return CheckOutcome{true, "all row splits agree"};
    }));

    out.push_back(make_check("bicharacter (columns)", subject, [hold, n] {
        for (long i = 0; i <= n; ++i)
            for (long j = 0; i + j <= n; ++j)
                for (long k = 0; k <= n; ++k) {
                    auto r = expect_equal(hold->at(i + j, k),
                                          column_recursion(*hold, i, j, k));
                    if (!r.passed) {
                        r.detail = "split " + degree_tag(i, j, k) + ": " +
                                   r.detail;
                        return r;
                    }
                }
        return CheckOutcome{true, "all column splits agree"};
    }));

    out.push_back(make_check("bicharacter (edges)", subject, [hold, n] {
        for (long k = 0; k <= n; ++k) {
            const GradedMorphism& counit = hold->diagram.component(k).counit;
            auto low = expect_equal(hold->at(0, k), counit);
            if (!low.passed) return low;
            auto high = expect_equal(hold->at(k, 0), counit);
            if (!high.passed) return high;
        }
        return CheckOutcome{true, "edges are counit functionals"};
    }));

    out.push_back(make_check("bicharacter (inverses)", subject, [hold, n] {
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= n; ++j) {
                Coalgebra x = pair_coalgebra(hold->diagram, i, j);
                auto left = expect_equal(
                    tensor_compose({hold->at(i, j), hold->inverse_at(i, j)},
                                   x.delta),
                    x.counit);
                if (!left.passed) {
                    left.detail = "entry " + degree_tag(i, j) +
                                  " (right inverse): " + left.detail;
                    return left;
                }
                auto right = expect_equal(
                    tensor_compose({hold->inverse_at(i, j), hold->at(i, j)},
                                   x.delta),
                    x.counit);
                if (!right.passed) {
                    right.detail = "entry " + degree_tag(i, j) +
                                   " (left inverse): " + right.detail;
                    return right;
                }
            }
        return CheckOutcome{true, "all entries are *-invertible"};
    }));
    return out;
}

GradedMorphism diagram_R(const DiagramBicharacter& bc, long i, long j) {
    const TruncatedTensorBialgebra& t = bc.diagram;
    Coalgebra x = pair_coalgebra(t, i, j);
    auto sigma_ij = t.sigma_at(i).at(t.component(j).carrier);
    auto inner =
        tensor_compose({bc.inverse_at(i, j), sigma_ij}, x.delta);
    return tensor_compose({inner, bc.at(i, j)}, x.delta);
}

CheckList check_diagram_R(const DiagramBicharacter& bc,
                          const std::string& subject) {
    CheckList out;
    const TruncatedTensorBialgebra& t = bc.diagram;
    const ContextPtr ctx = t.ctx;
    const long n = t.degree;

    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const std::string tag = subject + " " + degree_tag(i, j);
            auto r = diagram_R(bc, i, j);
            Coalgebra x = pair_coalgebra(t, i, j);
            Coalgebra y = pair_coalgebra(t, j, i);
            out.push_back(make_check("R coalgebra morphism", tag, [r, x, y] {
                auto comult = expect_equal(y.delta * r,
                                           tensor_compose({r, r}, x.delta));
                if (!comult.passed) return comult;
                return expect_equal(y.counit * r, x.counit);
            }));
            out.push_back(make_check("R invertible", tag, [r] {
                return expect_true(r.inverse().has_value(),
                                   "operator is singular");
            }));
        }
    }

    auto hold = std::make_shared<const DiagramBicharacter>(bc);
    out.push_back(make_check("R hexagon (rows)", subject, [hold, ctx, n] {
        const TruncatedTensorBialgebra& d = hold->diagram;
        for (long i = 1; i <= n; ++i)
            for (long j = 1; i + j <= n; ++j)
                for (long k = 1; k <= n; ++k) {
                    auto id_i = ctx->identity(d.component(i).carrier);
                    auto id_j = ctx->identity(d.component(j).carrier);
                    auto split = diagram_R(*hold, i, k).tensor(id_j) *
                                 id_i.tensor(diagram_R(*hold, j, k));
                    auto r = expect_equal(diagram_R(*hold, i + j, k), split);
                    if (!r.passed) {
                        r.detail = "split " + degree_tag(i, j, k) + ": " +
                                   r.detail;
                        return r;
                    }
                }
        return CheckOutcome{true, "all row splits agree"};
    }));

    out.push_back(make_check("R hexagon (columns)", subject, [hold, ctx, n] {
        const TruncatedTensorBialgebra& d = hold->diagram;
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j)
                for (long k = 1; j + k <= n; ++k) {
                    auto id_j = ctx->identity(d.component(j).carrier);
                    auto id_k = ctx->identity(d.component(k).carrier);
                    auto split = id_j.tensor(diagram_R(*hold, i, k)) *
                                 diagram_R(*hold, i, j).tensor(id_k);
                    auto r = expect_equal(diagram_R(*hold, i, j + k), split);
                    if (!r.passed) {
                        r.detail = "split " + degree_tag(i, j, k) + ": " +
                                   r.detail;
                        return r;
                    }
                }
        return CheckOutcome{true, "all column splits agree"};
    }));
    return out;
}

CentralCoalgebra dual_coalgebra(const ContextPtr& ctx, const GradedObject& v) {
    if (v.factor_count() != 1)
        throw StructuralError("the dual coalgebra is built on simple objects");
    GradedObject vd = v.dual();
    auto ev = ctx->ev(v);
    auto db = ctx->db(v);
    auto id_v = ctx->identity(v);
    auto id_vd = ctx->identity(vd);
    if (!(id_v.tensor(ev) * db.tensor(id_v) == id_v) ||
        !(ev.tensor(id_vd) * id_vd.tensor(db) == id_vd))
        throw StructuralError("the canonical dual fails the snake identities");
    GradedObject x = vd.tensor(v);
    Coalgebra c(ctx, x, id_vd.tensor(db).tensor(id_v), ev);
    ContextPtr cc = ctx;
    auto rule = [cc, v, vd, id_v, id_vd](const GradedObject& n) {
        return cc->braiding_inverse(vd, n).tensor(id_v) *
               id_vd.tensor(cc->braiding(v, n));
    };
    return CentralCoalgebra(std::move(c), HalfBraiding(ctx, x, rule));
}

CheckList check_comodule_central(const GradedObject& v,
                                 const CentralBialgebra& b,
                                 const GradedMorphism& rho,
                                 const std::vector<GradedObject>& probes,
                                 const std::string& subject) {
    const Bialgebra& bi = b.bialgebra;
    const ContextPtr ctx = bi.ctx;
    if (!(rho.source() == v) || !(rho.target() == v.tensor(bi.carrier)))
        throw StructuralError("coaction must map " + v.name() + " to " +
                              v.tensor(bi.carrier).name() + ", got " +
                              rho.source().name() + " -> " +
                              rho.target().name());
    CheckList out;
    auto id_v = ctx->identity(v);
    auto id_b = ctx->identity(bi.carrier);

    out.push_back(
        make_check("coaction coassociativity", subject, [rho, id_v, id_b, bi] {
            auto r = expect_equal(rho.tensor(id_b) * rho,
                                  id_v.tensor(bi.delta) * rho);
            if (!r.passed)
                r.detail = "(rho (x) B) rho = (V (x) Delta) rho: " + r.detail;
            return r;
        }));
    out.push_back(make_check("coaction counit", subject, [rho, id_v, bi] {
        auto r = expect_equal(id_v.tensor(bi.counit) * rho, id_v);
        if (!r.passed)
            r.detail = "(V (x) counit) rho = V: " + r.detail;
        return r;
    }));

    CentralCoalgebra dual = dual_coalgebra(ctx, v);
    auto induced =
        ctx->ev(v).tensor(id_b) * ctx->identity(v.dual()).tensor(rho);
    out.push_back(make_check("induced coalgebra morphism (comultiplication)",
                             subject, [bi, induced, dual] {
                                 return expect_equal(
                                     bi.delta * induced,
                                     tensor_compose({induced, induced},
                                                    dual.coalgebra.delta));
                             }));
    out.push_back(make_check("induced coalgebra morphism (counit)", subject,
                             [bi, induced, ctx, v] {
                                 return expect_equal(bi.counit * induced,
                                                     ctx->ev(v));
                             }));
    for (const GradedObject& probe : probes) {
        out.push_back(make_check(
            "half-braiding intertwiner", subject + " [N=" + probe.name() + "]",
            [b, dual, induced, ctx, probe] {
                auto id_n = ctx->identity(probe);
                return expect_equal(b.sigma.at(probe) * induced.tensor(id_n),
                                    id_n.tensor(induced) *
                                        dual.sigma.at(probe));
            }));
    }
    return out;
}

CheckList check_comodule_central(const GradedObject& v,
                                 const CentralBialgebra& b,
                                 const GradedMorphism& rho,
                                 const std::string& subject) {
    return check_comodule_central(v, b, rho, {v, b.carrier()}, subject);
}

} // namespace innertwist

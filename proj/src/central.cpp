#include "innertwist/central.hpp"

#include <sstream>

namespace innertwist {

HalfBraiding::HalfBraiding(ContextPtr ctx, GradedObject carrier, AtomRule rule)
    : ctx_(std::move(ctx)), carrier_(std::move(carrier)),
      rule_(std::move(rule)) {
    if (!ctx_) throw StructuralError("half-braiding needs a context");
    if (!rule_) throw StructuralError("half-braiding needs a component rule");
}

HalfBraiding HalfBraiding::tautological(ContextPtr ctx, GradedObject carrier) {
    ContextPtr c = ctx;
    GradedObject car = carrier;
    return HalfBraiding(std::move(ctx), std::move(carrier),
                        [c, car](const GradedObject& n) {
                            return c->braiding(car, n);
                        });
}

HalfBraiding HalfBraiding::from_components(
    ContextPtr ctx, GradedObject carrier,
    std::map<std::string, GradedMorphism> components) {
    ContextPtr c = ctx;
    GradedObject car = carrier;
    auto rule = [c, car, comp = std::move(components)](const GradedObject& n) {
        auto it = comp.find(n.atoms().front()->name);
        if (it == comp.end())
            throw StructuralError("no half-braiding component for object '" +
                                  n.name() + "'");
        const GradedMorphism& s = it->second;
        if (!(s.source() == car.tensor(n)) || !(s.target() == n.tensor(car))) {
            std::ostringstream msg;
            msg << "half-braiding component for '" << n.name()
                << "' has type " << s.source().name() << " -> "
                << s.target().name() << ", expected "
                << car.tensor(n).name() << " -> " << n.tensor(car).name();
            throw StructuralError(msg.str());
        }
        return s;
    };
    return HalfBraiding(std::move(ctx), std::move(carrier), std::move(rule));
}

GradedMorphism HalfBraiding::at(const GradedObject& n) const {
    if (is_null()) throw StructuralError("null half-braiding");
    if (n.factor_count() == 0) return ctx_->identity(carrier_);
    if (n.factor_count() == 1) return rule_(n);
    GradedObject head = n.factor(0);
    GradedObject tail = n.slice(1, n.factor_count());
    return ctx_->identity(head).tensor(at(tail)) *
           at(head).tensor(ctx_->identity(tail));
}

std::optional<GradedMorphism> HalfBraiding::try_inverse_at(
    const GradedObject& n) const {
    return at(n).inverse();
}

GradedMorphism HalfBraiding::inverse_at(const GradedObject& n) const {
    auto inv = try_inverse_at(n);
    if (!inv)
        throw StructuralError("half-braiding component at '" + n.name() +
                              "' is not invertible");
    return *inv;
}

HalfBraiding tensor_half_braiding(const HalfBraiding& a,
                                  const HalfBraiding& b) {
    if (a.is_null() || b.is_null())
        throw StructuralError("tensor of null half-braidings");
    if (a.context() != b.context())
        throw StructuralError("half-braidings live in different contexts");
    ContextPtr ctx = a.context();
    HalfBraiding ac = a, bc = b;
    auto rule = [ctx, ac, bc](const GradedObject& n) {
        return ac.at(n).tensor(ctx->identity(bc.carrier())) *
               ctx->identity(ac.carrier()).tensor(bc.at(n));
    };
    return HalfBraiding(ctx, a.carrier().tensor(b.carrier()), std::move(rule));
}

CentralBialgebra::CentralBialgebra(Bialgebra b, HalfBraiding s,
                                   std::optional<GradedMorphism> antipode_in)
    : bialgebra(std::move(b)), sigma(std::move(s)),
      antipode(std::move(antipode_in)) {
    if (sigma.is_null()) throw StructuralError("central bialgebra needs a half-braiding");
    if (!(sigma.carrier() == bialgebra.carrier))
        throw StructuralError(
            "half-braiding carrier differs from the bialgebra carrier");
    if (sigma.context() != bialgebra.ctx)
        throw StructuralError(
            "half-braiding and bialgebra live in different contexts");
    if (antipode && (!(antipode->source() == bialgebra.carrier) ||
                     !(antipode->target() == bialgebra.carrier)))
        throw StructuralError("antipode must be an endomorphism of the carrier");
}

std::optional<HopfAlgebra> CentralBialgebra::as_hopf() const {
    if (!antipode) return std::nullopt;
    return HopfAlgebra(bialgebra, *antipode);
}

namespace {

Check make_check(std::string anchor, std::string subject,
                 std::function<CheckOutcome()> fn) {
    Check c;
    c.anchor = std::move(anchor);
    c.subject = std::move(subject);
    c.run = std::move(fn);
    return c;
}

Check make_skip(std::string anchor, std::string subject, std::string reason) {
    Check c;
    c.anchor = std::move(anchor);
    c.subject = std::move(subject);
    c.skip_reason = std::move(reason);
    return c;
}

} // namespace

CheckList check_central_axioms(const CentralBialgebra& b,
                               const std::string& subject,
                               const std::vector<Coalgebra>& tests,
                               const std::vector<NamedMorphism>& naturality) {
    CheckList out;
    const Bialgebra& bi = b.bialgebra;
    const ContextPtr ctx = bi.ctx;
    const HalfBraiding sigma = b.sigma;

    for (const Coalgebra& test : tests) {
        const GradedObject c = test.carrier;
        const std::string tag = subject + " [C=" + c.name() + "]";
        auto id_b = ctx->identity(bi.carrier);
        auto id_c = ctx->identity(c);

        out.push_back(make_check("Z1", tag, [bi, test, sigma] {
            auto s = sigma.at(test.carrier);
            Coalgebra bc = tensor_coalgebra(bi.as_coalgebra(), test);
            Coalgebra cb = tensor_coalgebra(test, bi.as_coalgebra());
            auto comult =
                expect_equal(cb.delta * s, tensor_compose({s, s}, bc.delta));
            if (!comult.passed) return comult;
            return expect_equal(cb.counit * s, bc.counit);
        }));

        // Z2 naturality family: the supplied morphisms plus Delta_C,
        // counit_C, and the unit of B when the test carrier is B itself.
        std::vector<NamedMorphism> family = naturality;
        family.push_back({"Delta_" + c.name(), test.delta});
        family.push_back({"counit_" + c.name(), test.counit});
        if (c == bi.carrier) family.push_back({"unit", bi.unit});
        out.push_back(make_check("Z2", tag, [ctx, bi, sigma, family] {
            for (const NamedMorphism& nf : family) {
                const GradedMorphism& f = nf.morphism;
                auto lhs = sigma.at(f.target()) *
                           ctx->identity(bi.carrier).tensor(f);
                auto rhs = f.tensor(ctx->identity(bi.carrier)) *
                           sigma.at(f.source());
                auto r = expect_equal(lhs, rhs);
                if (!r.passed) {
                    r.detail = "naturality against " + nf.name + ": " + r.detail;
                    return r;
                }
            }
            return CheckOutcome{true, ""};
        }));

        out.push_back(make_check("Z3", tag, [sigma, c] {
            return expect_true(sigma.try_inverse_at(c).has_value(),
                               "sigma component is singular");
        }));

        out.push_back(make_check("Z4", tag, [bi, sigma, id_c] {
            auto s = sigma.at(id_c.source());
            return expect_equal(s * bi.unit.tensor(id_c),
                                id_c.tensor(bi.unit));
        }));

        out.push_back(make_check("Z5", tag, [bi, sigma, id_b, id_c] {
            auto s = sigma.at(id_c.source());
            auto sigma_bb_c = s.tensor(id_b) * id_b.tensor(s);
            return expect_equal(s * bi.mult.tensor(id_c),
                                id_c.tensor(bi.mult) * sigma_bb_c);
        }));
    }
    return out;
}

CheckList check_central_axioms(const CentralBialgebra& b,
                               const std::string& subject) {
    return check_central_axioms(b, subject, {b.bialgebra.as_coalgebra()}, {});
}

CheckList check_derived_sigma_identities(
    const Coalgebra& b, const HalfBraiding& sigma, const GradedObject& c,
    const std::optional<GradedMorphism>& antipode_of_c,
    const std::string& subject) {
    CheckList out;
    const ContextPtr ctx = b.ctx;
    const GradedObject carrier = b.carrier;
    auto id_b = ctx->identity(carrier);
    auto id_c = ctx->identity(c);
    const GradedMorphism delta = b.delta;

    out.push_back(make_check("eq (7)", subject, [ctx, sigma, c, carrier, delta,
                                                 id_b, id_c] {
        auto s = sigma.at(c);
        return expect_equal(
            id_c.tensor(delta) * s,
            s.tensor(id_b) * id_b.tensor(ctx->braiding(carrier, c)) *
                delta.tensor(id_c));
    }));
    out.push_back(make_check("eq (8)", subject, [ctx, sigma, c, carrier, delta,
                                                 id_b, id_c] {
        auto s = sigma.at(c);
        return expect_equal(
            id_c.tensor(delta) * s,
            ctx->braiding_inverse(carrier, c).tensor(id_b) *
                id_b.tensor(s) * delta.tensor(id_c));
    }));
    out.push_back(make_check("eq (7) inverse", subject,
                             [ctx, sigma, c, carrier, delta, id_b, id_c] {
                                 auto sinv = sigma.inverse_at(c);
                                 return expect_equal(
                                     delta.tensor(id_c) * sinv,
                                     id_b.tensor(ctx->braiding_inverse(c, carrier)) *
                                         sinv.tensor(id_b) *
                                         id_c.tensor(delta));
                             }));
    out.push_back(make_check("eq (8) inverse", subject,
                             [ctx, sigma, c, carrier, delta, id_b, id_c] {
                                 auto sinv = sigma.inverse_at(c);
                                 return expect_equal(
                                     delta.tensor(id_c) * sinv,
                                     id_b.tensor(sinv) *
                                         ctx->braiding(c, carrier).tensor(id_b) *
                                         id_c.tensor(delta));
                             }));
    if (antipode_of_c) {
        GradedMorphism s_c = *antipode_of_c;
        out.push_back(make_check("S-sigma commute", subject,
                                 [sigma, c, s_c, id_b, id_c] {
                                     auto s = sigma.at(c);
                                     return expect_equal(
                                         s * id_b.tensor(s_c),
                                         s_c.tensor(id_b) * s);
                                 }));
    } else {
        out.push_back(
            make_skip("S-sigma commute", subject, "no antipode available"));
    }
    return out;
}

CheckList check_derived_sigma_identities(const CentralBialgebra& b,
                                         const std::string& subject) {
    return check_derived_sigma_identities(b.bialgebra.as_coalgebra(), b.sigma,
                                          b.carrier(), b.antipode, subject);
}

CheckList check_schauenburg(const CentralBialgebra& b,
                            const std::string& subject) {
    CheckList out;
    if (!b.antipode) {
        out.push_back(make_skip("Schauenburg", subject, "no antipode available"));
        return out;
    }
    const ContextPtr ctx = b.bialgebra.ctx;
    const GradedObject carrier = b.carrier();
    const HalfBraiding sigma = b.sigma;
    GradedMorphism s = *b.antipode;
    out.push_back(make_check("Schauenburg", subject, [ctx, sigma, carrier, s] {
        auto id = ctx->identity(carrier);
        auto sg = sigma.at(carrier);
        auto sg_inv = sigma.inverse_at(carrier);
        auto lhs = sg * s.tensor(id);
        auto rhs = id.tensor(s) * ctx->braiding(carrier, carrier) * sg_inv *
                   ctx->braiding_inverse(carrier, carrier);
        return expect_equal(lhs, rhs);
    }));
    return out;
}

bool is_commutative(const CentralBialgebra& b) {
    return b.bialgebra.mult * b.innertwist() == b.bialgebra.mult;
}

CentralBialgebra opposite_product(const CentralBialgebra& b) {
    const Bialgebra& bi = b.bialgebra;
    Bialgebra op(bi.ctx, bi.carrier, bi.mult * b.innertwist(), bi.unit,
                 bi.delta, bi.counit);
    return CentralBialgebra(std::move(op), b.sigma, std::nullopt);
}

CentralBialgebra opposite_product_alt(const CentralBialgebra& b) {
    const Bialgebra& bi = b.bialgebra;
    Bialgebra op(bi.ctx, bi.carrier, bi.mult * b.sigma.inverse_at(bi.carrier),
                 bi.unit, bi.delta, bi.counit);
    return CentralBialgebra(std::move(op), b.sigma, std::nullopt);
}

std::optional<GradedMorphism> opposite_antipode(const CentralBialgebra& b) {
    if (!b.antipode) return std::nullopt;
    auto s_inv = b.antipode->inverse();
    if (!s_inv) return std::nullopt;
    auto sigma_inv = b.sigma.try_inverse_at(b.carrier());
    if (!sigma_inv) return std::nullopt;
    const Bialgebra& bi = b.bialgebra;
    return bi.counit.tensor(*s_inv) * *sigma_inv *
           bi.ctx->braiding_inverse(bi.carrier, bi.carrier) * bi.delta;
}

std::optional<GradedMorphism> opposite_antipode_alt(const CentralBialgebra& b) {
    if (!b.antipode) return std::nullopt;
    auto s_inv = b.antipode->inverse();
    if (!s_inv) return std::nullopt;
    const Bialgebra& bi = b.bialgebra;
    return s_inv->tensor(bi.counit) * b.innertwist() *
           bi.ctx->braiding_inverse(bi.carrier, bi.carrier) * bi.delta;
}

CentralBialgebra tensor_central_bialgebra(const CentralBialgebra& a,
                                          const CentralBialgebra& b) {
    if (a.bialgebra.ctx != b.bialgebra.ctx)
        throw StructuralError("tensor factors live in different contexts");
    const ContextPtr ctx = a.bialgebra.ctx;
    const Bialgebra& ba = a.bialgebra;
    const Bialgebra& bb = b.bialgebra;
    auto id_a = ctx->identity(ba.carrier);
    auto id_b = ctx->identity(bb.carrier);

    Coalgebra coalg =
        tensor_coalgebra(ba.as_coalgebra(), bb.as_coalgebra());
    GradedMorphism mult = ba.mult.tensor(bb.mult) *
                          id_a.tensor(b.sigma.at(ba.carrier)).tensor(id_b);
    GradedMorphism unit = ba.unit.tensor(bb.unit);
    Bialgebra product(ctx, coalg.carrier, std::move(mult), std::move(unit),
                      coalg.delta, coalg.counit);

    HalfBraiding sigma = tensor_half_braiding(a.sigma, b.sigma);

    std::optional<GradedMorphism> antipode;
    if (a.antipode && b.antipode) {
        antipode = b.sigma.at(ba.carrier) * b.antipode->tensor(*a.antipode) *
                   ctx->braiding_inverse(ba.carrier, bb.carrier);
    }
    return CentralBialgebra(std::move(product), std::move(sigma),
                            std::move(antipode));
}

} // namespace innertwist

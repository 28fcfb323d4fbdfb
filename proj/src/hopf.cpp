#include "innertwist/hopf.hpp"

#include <sstream>

namespace innertwist {

namespace {

void require_type(const GradedMorphism& f, const GradedObject& src,
                  const GradedObject& dst, const std::string& what) {
    if (f.is_null())
        throw StructuralError(what + " is missing");
    if (!(f.source() == src) || !(f.target() == dst)) {
        std::ostringstream msg;
        msg << what << " has type " << f.source().name() << " -> "
            << f.target().name() << ", expected " << src.name() << " -> "
            << dst.name();
        throw StructuralError(msg.str());
    }
}

void require_shared_context(const ContextPtr& a, const ContextPtr& b,
                            const std::string& what) {
    if (!a || !b) throw StructuralError(what + ": missing context");
    if (a != b)
        throw StructuralError(what +
                              ": operands live in different contexts");
}

Check make_check(std::string anchor, std::string subject,
                 std::function<CheckOutcome()> fn) {
    Check c;
    c.anchor = std::move(anchor);
    c.subject = std::move(subject);
    c.run = std::move(fn);
    return c;
}

} // namespace

Coalgebra::Coalgebra(ContextPtr context, GradedObject car, GradedMorphism d,
                     GradedMorphism e)
    : ctx(std::move(context)), carrier(std::move(car)), delta(std::move(d)),
      counit(std::move(e)) {
    if (!ctx) throw StructuralError("coalgebra needs a context");
    require_type(delta, carrier, carrier.tensor(carrier), "comultiplication");
    require_type(counit, carrier, GradedObject(), "counit");
}

Algebra::Algebra(ContextPtr context, GradedObject car, GradedMorphism m,
                 GradedMorphism u)
    : ctx(std::move(context)), carrier(std::move(car)), mult(std::move(m)),
      unit(std::move(u)) {
    if (!ctx) throw StructuralError("algebra needs a context");
    require_type(mult, carrier.tensor(carrier), carrier, "multiplication");
    require_type(unit, GradedObject(), carrier, "unit");
}

Bialgebra::Bialgebra(ContextPtr context, GradedObject car, GradedMorphism m,
                     GradedMorphism u, GradedMorphism d, GradedMorphism e)
    : ctx(std::move(context)), carrier(std::move(car)), mult(std::move(m)),
      unit(std::move(u)), delta(std::move(d)), counit(std::move(e)) {
    if (!ctx) throw StructuralError("bialgebra needs a context");
    require_type(mult, carrier.tensor(carrier), carrier, "multiplication");
    require_type(unit, GradedObject(), carrier, "unit");
    require_type(delta, carrier, carrier.tensor(carrier), "comultiplication");
    require_type(counit, carrier, GradedObject(), "counit");
}

Coalgebra Bialgebra::as_coalgebra() const {
    return Coalgebra(ctx, carrier, delta, counit);
}

Algebra Bialgebra::as_algebra() const {
    return Algebra(ctx, carrier, mult, unit);
}

HopfAlgebra::HopfAlgebra(Bialgebra b, GradedMorphism s)
    : bialgebra(std::move(b)), antipode(std::move(s)) {
    require_type(antipode, bialgebra.carrier, bialgebra.carrier, "antipode");
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
    require_shared_context(a.ctx, b.ctx, "tensor coalgebra");
    const auto& ctx = *a.ctx;
    auto id_a = ctx.identity(a.carrier);
    auto id_b = ctx.identity(b.carrier);
    auto mid = ctx.braiding(a.carrier, b.carrier);
    return Coalgebra(a.ctx, a.carrier.tensor(b.carrier),
                     tensor_compose({id_a, mid, id_b},
                                    a.delta.tensor(b.delta)),
                     a.counit.tensor(b.counit));
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    require_shared_context(a.ctx, b.ctx, "tensor algebra");
    const auto& ctx = *a.ctx;
    auto id_a = ctx.identity(a.carrier);
    auto id_b = ctx.identity(b.carrier);
    auto mid = ctx.braiding(b.carrier, a.carrier);
    return Algebra(a.ctx, a.carrier.tensor(b.carrier),
                   compose_tensor(a.mult.tensor(b.mult), {id_a, mid, id_b}),
                   a.unit.tensor(b.unit));
}

Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b) {
    Algebra alg = tensor_algebra(a.as_algebra(), b.as_algebra());
    Coalgebra coalg = tensor_coalgebra(a.as_coalgebra(), b.as_coalgebra());
    return Bialgebra(a.ctx, alg.carrier, alg.mult, alg.unit, coalg.delta,
                     coalg.counit);
}

GradedMorphism convolve(const Coalgebra& c, const Algebra& a,
                        const GradedMorphism& f, const GradedMorphism& g) {
    require_shared_context(c.ctx, a.ctx, "convolution");
    if (!(f.source() == c.carrier) || !(g.source() == c.carrier))
        throw StructuralError("convolution factors must start at the "
                              "coalgebra carrier");
    GradedMorphism h = f.tensor(g) * c.delta;
    if (f.target() == a.carrier && g.target() == a.carrier)
        return a.mult * h;
    return h;
}

std::optional<GradedMorphism> convolution_inverse(const Coalgebra& c,
                                                  const GradedMorphism& f) {
    require_type(f, c.carrier, GradedObject(), "functional");
    const auto& ctx = *c.ctx;
    const FieldPtr& field = ctx.field();
    const long d = c.carrier.dim();
    auto id = ctx.identity(c.carrier);
    // (f (x) g) delta = counit reads, entrywise, g((f (x) id) delta (-)) =
    // counit(-): one linear equation per basis vector, and symmetrically
    // for the right identity.  Stack both and solve exactly.
    Mat left = (f.tensor(id) * c.delta).matrix();   // d x d
    Mat right = (id.tensor(f) * c.delta).matrix();  // d x d
    Mat a(field, 2 * d, d);
    Mat rhs(field, 2 * d, 1);
    for (long k = 0; k < d; ++k) {
        for (long j = 0; j < d; ++j) {
            a.at(k, j) = left.at(j, k);
            a.at(d + k, j) = right.at(j, k);
        }
        rhs.at(k, 0) = c.counit.matrix().at(0, k);
        rhs.at(d + k, 0) = c.counit.matrix().at(0, k);
    }
    auto x = solve_linear(a, rhs);
    if (!x) return std::nullopt;
    Mat g(field, 1, d);
    for (long j = 0; j < d; ++j) g.at(0, j) = x->at(j, 0);
    return GradedMorphism(c.carrier, GradedObject(), std::move(g));
}

std::optional<GradedMorphism> solve_antipode(const Bialgebra& b) {
    const FieldPtr& field = b.ctx->field();
    const long d = b.carrier.dim();
    const Mat& m = b.mult.matrix();   // d x d^2
    const Mat& dl = b.delta.matrix(); // d^2 x d
    // Unknowns: the d^2 entries of S (row-major).  Both antipode axioms are
    // linear in S:
    //   [mult (S (x) id) delta](a,b) = sum_{p,q,k} m[a][(p,q)] S[p][k] dl[(k,q)][b]
    //   [mult (id (x) S) delta](a,b) = sum_{p,q,l} m[a][(p,q)] S[q][l] dl[(p,l)][b]
    Mat sys(field, 2 * d * d, d * d);
    Mat rhs(field, 2 * d * d, 1);
    for (long aa = 0; aa < d; ++aa)
        for (long p = 0; p < d; ++p)
            for (long q = 0; q < d; ++q) {
                const CycScalar& mv = m.at(aa, p * d + q);
                if (mv.is_zero()) continue;
                for (long k = 0; k < d; ++k)
                    for (long bb = 0; bb < d; ++bb) {
                        const CycScalar& d1 = dl.at(k * d + q, bb);
                        if (!d1.is_zero()) {
                            CycScalar& cell = sys.at(aa * d + bb, p * d + k);
                            cell = cell + mv * d1;
                        }
                        const CycScalar& d2 = dl.at(p * d + k, bb);
                        if (!d2.is_zero()) {
                            CycScalar& cell =
                                sys.at(d * d + aa * d + bb, q * d + k);
                            cell = cell + mv * d2;
                        }
                    }
            }
    for (long aa = 0; aa < d; ++aa)
        for (long bb = 0; bb < d; ++bb) {
            CycScalar v = b.unit.matrix().at(aa, 0) * b.counit.matrix().at(0, bb);
            rhs.at(aa * d + bb, 0) = v;
            rhs.at(d * d + aa * d + bb, 0) = std::move(v);
        }
    auto x = solve_linear(sys, rhs);
    if (!x) return std::nullopt;
    Mat s(field, d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) s.at(i, j) = x->at(i * d + j, 0);
    return GradedMorphism(b.carrier, b.carrier, std::move(s));
}

CheckList check_coalgebra(const Coalgebra& c, const std::string& subject) {
    CheckList out;
    auto id = c.ctx->identity(c.carrier);
    out.push_back(make_check("coassociativity", subject, [c, id] {
        return expect_equal(c.delta.tensor(id) * c.delta,
                            id.tensor(c.delta) * c.delta);
    }));
    out.push_back(make_check("counit", subject, [c, id] {
        auto l = expect_equal(c.counit.tensor(id) * c.delta, id);
        if (!l.passed) return l;
        return expect_equal(id.tensor(c.counit) * c.delta, id);
    }));
    out.push_back(make_check("homogeneity", subject + ": coalgebra maps", [c] {
        const auto& g = c.ctx->group();
        if (!c.delta.is_homogeneous(g))
            return CheckOutcome{false, "comultiplication is not grade-preserving"};
        if (!c.counit.is_homogeneous(g))
            return CheckOutcome{false, "counit is not grade-preserving"};
        return CheckOutcome{true, ""};
    }));
    return out;
}

CheckList check_algebra(const Algebra& a, const std::string& subject) {
    CheckList out;
    auto id = a.ctx->identity(a.carrier);
    out.push_back(make_check("associativity", subject, [a, id] {
        return expect_equal(a.mult * a.mult.tensor(id),
                            a.mult * id.tensor(a.mult));
    }));
    out.push_back(make_check("unit", subject, [a, id] {
        auto l = expect_equal(a.mult * a.unit.tensor(id), id);
        if (!l.passed) return l;
        return expect_equal(a.mult * id.tensor(a.unit), id);
    }));
    out.push_back(make_check("homogeneity", subject + ": algebra maps", [a] {
        const auto& g = a.ctx->group();
        if (!a.mult.is_homogeneous(g))
            return CheckOutcome{false, "multiplication is not grade-preserving"};
        if (!a.unit.is_homogeneous(g))
            return CheckOutcome{false, "unit is not grade-preserving"};
        return CheckOutcome{true, ""};
    }));
    return out;
}

CheckList check_bialgebra(const Bialgebra& b, const std::string& subject) {
    CheckList out = check_algebra(b.as_algebra(), subject);
    CheckList co = check_coalgebra(b.as_coalgebra(), subject);
    out.insert(out.end(), co.begin(), co.end());

    auto id = b.ctx->identity(b.carrier);
    auto tau = b.ctx->braiding(b.carrier, b.carrier);
    out.push_back(make_check("bialgebra compatibility", subject, [b, id, tau] {
        return expect_equal(
            b.delta * b.mult,
            compose_tensor(b.mult.tensor(b.mult), {id, tau, id}) *
                b.delta.tensor(b.delta));
    }));
    out.push_back(make_check("bialgebra unit/counit", subject, [b] {
        auto du = expect_equal(b.delta * b.unit, b.unit.tensor(b.unit));
        if (!du.passed) return du;
        auto em = expect_equal(b.counit * b.mult,
                               b.counit.tensor(b.counit));
        if (!em.passed) return em;
        return expect_equal(b.counit * b.unit,
                            b.ctx->identity(GradedObject()));
    }));
    return out;
}

CheckList check_hopf(const HopfAlgebra& h, const std::string& subject) {
    CheckList out = check_bialgebra(h.bialgebra, subject);
    const Bialgebra& b = h.bialgebra;
    auto id = b.ctx->identity(b.carrier);
    auto tau = b.ctx->braiding(b.carrier, b.carrier);
    GradedMorphism s = h.antipode;

    out.push_back(make_check("antipode", subject, [b, s, id] {
        GradedMorphism eta_eps = b.unit * b.counit;
        auto l = expect_equal(b.mult * s.tensor(id) * b.delta, eta_eps);
        if (!l.passed) return l;
        return expect_equal(b.mult * id.tensor(s) * b.delta, eta_eps);
    }));
    out.push_back(make_check("antipode anti-morphism", subject, [b, s, tau] {
        auto alg = expect_equal(s * b.mult, b.mult * tau * s.tensor(s));
        if (!alg.passed) return alg;
        return expect_equal(b.delta * s, s.tensor(s) * tau * b.delta);
    }));
    return out;
}

} // namespace innertwist

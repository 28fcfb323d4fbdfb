#include "innertwist/cqt.hpp"

namespace innertwist {

namespace {

const char* const kNotStarInvertible = "r is not *-invertible";
const char* const kNoAntipode = "no antipode available";

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

GradedMorphism stored_u(const CqtStructure& q) {
    return q.u ? *q.u : compute_u(q);
}

GradedMorphism stored_u_star(const CqtStructure& q) {
    return q.u_star ? *q.u_star : compute_u_star(q);
}

GradedMorphism antipode_or_throw(const CqtStructure& q, const char* who) {
    if (!q.base.antipode)
        throw StructuralError(std::string(who) + " needs an antipode on " +
                              q.base.carrier().name());
    return *q.base.antipode;
}

/// Delta2 = (Delta (x) B)Delta: B -> B(x)B(x)B.
GradedMorphism iterated_delta(const Bialgebra& bi) {
    return bi.delta.tensor(bi.ctx->identity(bi.carrier)) * bi.delta;
}

} // namespace

Coalgebra tensor_square_coalgebra(const CentralBialgebra& b) {
    Coalgebra c = b.bialgebra.as_coalgebra();
    return tensor_coalgebra(c, c);
}

std::optional<CqtStructure> make_cqt(const CentralBialgebra& b,
                                     const GradedMorphism& r) {
    const GradedObject square = b.carrier().tensor(b.carrier());
    if (!(r.source() == square) || !(r.target() == GradedObject()))
        throw StructuralError("the pairing must be a functional on " +
                              square.name());
    Coalgebra bb = tensor_square_coalgebra(b);
    auto r_inv = convolution_inverse(bb, r);
    if (!r_inv) return std::nullopt;
    CqtStructure q{b,
                   r,
                   *r_inv,
                   *r_inv * b.innertwist(),
                   std::nullopt,
                   std::nullopt};
    if (b.antipode) {
        q.u = compute_u(q);
        q.u_star = compute_u_star(q);
    }
    return q;
}

namespace {

/// The defining axioms plus the r-inverse re-verification; `q` is the
/// derived data when r is *-invertible.  CQT1/CQT2 never touch the inverse
/// and always run.
CheckList axiom_checks(const CentralBialgebra& b, const GradedMorphism& r,
                       const std::optional<CqtStructure>& q,
                       const std::string& subject) {
    CheckList out;
    const Bialgebra bi = b.bialgebra;
    Coalgebra bb = tensor_square_coalgebra(b);
    Algebra alg = bi.as_algebra();
    auto id_b = bi.ctx->identity(bi.carrier);
    auto sigma = b.innertwist();

    out.push_back(make_check("CQT1", subject, [bb, alg, bi, sigma, r] {
        return expect_equal(convolve(bb, alg, bi.mult * sigma, r),
                            convolve(bb, alg, r, bi.mult));
    }));
    out.push_back(make_check("CQT2a", subject, [r, bi, id_b, sigma] {
        auto lhs = r * bi.mult.tensor(id_b);
        auto rhs =
            compose_tensor(compose_tensor(r.tensor(r), {id_b, sigma, id_b}),
                           {id_b, id_b, bi.delta});
        return expect_equal(lhs, rhs);
    }));
    out.push_back(make_check("CQT2b", subject, [r, bi, id_b] {
        auto lhs = r * id_b.tensor(bi.mult);
        auto rhs = compose_tensor(compose_tensor(r, {id_b, r, id_b}),
                                  {bi.delta, id_b, id_b});
        return expect_equal(lhs, rhs);
    }));
    if (!q) {
        out.push_back(make_check("CQT3", subject, [] {
            return CheckOutcome{false, kNotStarInvertible};
        }));
        out.push_back(
            make_skip("r-inverse remark", subject, kNotStarInvertible));
        return out;
    }
    const CqtStructure qq = *q;
    auto rs_sigma = qq.r_star * sigma;
    out.push_back(make_check("CQT3", subject, [bb, alg, rs_sigma, r] {
        auto left = expect_equal(convolve(bb, alg, rs_sigma, r), bb.counit);
        if (!left.passed) return left;
        return expect_equal(convolve(bb, alg, r, rs_sigma), bb.counit);
    }));
    out.push_back(make_check("r-inverse remark", subject, [qq] {
        auto sigma_inv = qq.base.sigma.inverse_at(qq.base.carrier());
        return expect_equal(qq.r_inv, qq.r_star * sigma_inv);
    }));
    return out;
}

CheckList lemma_rrs_checks(const CqtStructure& q, const std::string& subject,
                           bool with_antipode_parts) {
    CheckList out;
    const CqtStructure qq = q;
    const Bialgebra bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    auto tau = bi.ctx->braiding(bi.carrier, bi.carrier);
    auto tau_inv = bi.ctx->braiding_inverse(bi.carrier, bi.carrier);

    if (with_antipode_parts) {
        if (!q.base.antipode) {
            out.push_back(make_skip("Lemma rrs (i)", subject, kNoAntipode));
            out.push_back(make_skip("Lemma rrs (ii)", subject, kNoAntipode));
        } else {
            out.push_back(
                make_check("Lemma rrs (i)", subject, [qq, id_b, tau_inv] {
                    return expect_equal(
                        qq.r * qq.base.antipode->tensor(id_b),
                        qq.r_star * tau_inv);
                }));
            out.push_back(make_check("Lemma rrs (ii)", subject, [qq, id_b] {
                auto sigma_inv =
                    qq.base.sigma.inverse_at(qq.base.carrier());
                return expect_equal(
                    qq.r_star * qq.base.antipode->tensor(id_b),
                    qq.r * sigma_inv);
            }));
        }
    }
    out.push_back(make_check("Lemma rrs (iii)", subject, [qq, bi, id_b, tau] {
        auto lhs = qq.r_star * bi.mult.tensor(id_b);
        auto rhs = compose_tensor(
            compose_tensor(qq.r_star.tensor(qq.r_star), {id_b, tau, id_b}),
            {id_b, id_b, bi.delta});
        return expect_equal(lhs, rhs);
    }));
    out.push_back(
        make_check("Lemma rrs (iv)", subject, [qq, bi, id_b, tau_inv] {
            auto sigma_inv = qq.base.sigma.inverse_at(qq.base.carrier());
            auto lhs = qq.r_star * id_b.tensor(bi.mult);
            auto rhs = compose_tensor(
                compose_tensor(qq.r_star.tensor(qq.r_star),
                               {id_b, sigma_inv, id_b}),
                {tau_inv * bi.delta, id_b, id_b});
            return expect_equal(lhs, rhs);
        }));
    return out;
}

} // namespace

CheckList check_cqt(const CentralBialgebra& b, const GradedMorphism& r,
                    const std::string& subject) {
    return axiom_checks(b, r, make_cqt(b, r), subject);
}

CheckList check_rsm(const CqtStructure& q, const std::string& subject) {
    CheckList out;
    const CqtStructure qq = q;
    out.push_back(make_check("eq (rsm)", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        Coalgebra bb = tensor_square_coalgebra(qq.base);
        Algebra alg = bi.as_algebra();
        auto sigma = qq.base.innertwist();
        auto rs_sigma = qq.r_star * sigma;
        return expect_equal(convolve(bb, alg, rs_sigma, bi.mult * sigma),
                            convolve(bb, alg, bi.mult, rs_sigma));
    }));
    return out;
}

bool r_sigma_commute(const CqtStructure& q) {
    const Bialgebra& bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    auto past_pair = q.base.sigma.at(bi.carrier.tensor(bi.carrier));
    return id_b.tensor(q.r) == q.r.tensor(id_b) * past_pair;
}

CheckList check_lemma_rrs(const CqtStructure& q, const std::string& subject) {
    return lemma_rrs_checks(q, subject, true);
}

CheckList check_unit_pairings(const CqtStructure& q,
                              const std::string& subject) {
    CheckList out;
    const CqtStructure qq = q;
    auto pair_vs_counit = [](const GradedMorphism& pairing,
                             const Bialgebra& bi) {
        auto id_b = bi.ctx->identity(bi.carrier);
        auto left =
            expect_equal(pairing * bi.unit.tensor(id_b), bi.counit);
        if (!left.passed) return left;
        return expect_equal(pairing * id_b.tensor(bi.unit), bi.counit);
    };
    out.push_back(make_check("unit pairings (r)", subject, [qq,
                                                            pair_vs_counit] {
        return pair_vs_counit(qq.r, qq.base.bialgebra);
    }));
    out.push_back(
        make_check("unit pairings (r*)", subject, [qq, pair_vs_counit] {
            return pair_vs_counit(qq.r_star, qq.base.bialgebra);
        }));
    return out;
}

GradedMorphism compute_u(const CqtStructure& q) {
    auto s = antipode_or_throw(q, "u");
    const Bialgebra& bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    auto sigma_inv = q.base.sigma.inverse_at(bi.carrier);
    return q.r * sigma_inv * s.tensor(id_b) * bi.delta;
}

GradedMorphism compute_u_star(const CqtStructure& q) {
    auto s = antipode_or_throw(q, "u*");
    const Bialgebra& bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    return q.r_star * id_b.tensor(s) * bi.delta;
}

CheckList check_defu1(const CqtStructure& q, const std::string& subject) {
    CheckList out;
    if (!q.base.antipode) {
        out.push_back(make_skip("defu1 consistency (u)", subject, kNoAntipode));
        out.push_back(
            make_skip("defu1 consistency (u*)", subject, kNoAntipode));
        return out;
    }
    const CqtStructure qq = q;
    out.push_back(make_check("defu1 consistency (u)", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto s2 = *qq.base.antipode * *qq.base.antipode;
        return expect_equal(stored_u(qq),
                            qq.r_star * s2.tensor(id_b) * bi.delta);
    }));
    out.push_back(make_check("defu1 consistency (u*)", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto s2 = *qq.base.antipode * *qq.base.antipode;
        auto sigma_inv = qq.base.sigma.inverse_at(bi.carrier);
        return expect_equal(stored_u_star(qq),
                            qq.r * sigma_inv * s2.tensor(id_b) * bi.delta);
    }));
    return out;
}

CheckList check_lemma_uu(const CqtStructure& q, const std::string& subject) {
    CheckList out;
    if (!q.base.antipode) {
        out.push_back(make_skip("Lemma uu (i)", subject, kNoAntipode));
        out.push_back(make_skip("Lemma uu (ii)", subject, kNoAntipode));
        return out;
    }
    const CqtStructure qq = q;
    out.push_back(make_check("Lemma uu (i)", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto s2 = *qq.base.antipode * *qq.base.antipode;
        auto sigma_inv = qq.base.sigma.inverse_at(bi.carrier);
        auto u = stored_u(qq);
        return expect_equal(u.tensor(id_b) * bi.delta,
                            u.tensor(s2) * sigma_inv * bi.delta);
    }));
    out.push_back(make_check("Lemma uu (ii)", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto s2 = *qq.base.antipode * *qq.base.antipode;
        auto tau_inv =
            bi.ctx->braiding_inverse(bi.carrier, bi.carrier);
        auto u_star = stored_u_star(qq);
        return expect_equal(
            u_star.tensor(s2) * bi.delta,
            id_b.tensor(u_star) * qq.base.innertwist() * tau_inv * bi.delta);
    }));
    return out;
}

CheckList check_u_inverse(const CqtStructure& q, const std::string& subject) {
    CheckList out;
    if (!q.base.antipode) {
        out.push_back(make_skip("u inverse", subject, kNoAntipode));
        return out;
    }
    const CqtStructure qq = q;
    out.push_back(make_check("u inverse", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        Coalgebra cb = bi.as_coalgebra();
        Algebra alg = bi.as_algebra();
        auto u = stored_u(qq);
        auto u_star = stored_u_star(qq);
        auto left = expect_equal(convolve(cb, alg, u, u_star), bi.counit);
        if (!left.passed) return left;
        return expect_equal(convolve(cb, alg, u_star, u), bi.counit);
    }));
    return out;
}

GradedMorphism antipode_square_via_u(const CqtStructure& q) {
    antipode_or_throw(q, "the antipode-square composite");
    const Bialgebra& bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    auto tau_inv = bi.ctx->braiding_inverse(bi.carrier, bi.carrier);
    auto mid = q.base.innertwist() * tau_inv;
    return stored_u(q).tensor(id_b).tensor(stored_u_star(q)) *
           tensor_compose({id_b, mid}, iterated_delta(bi));
}

GradedMorphism antipode_inverse_via_u(const CqtStructure& q) {
    auto s = antipode_or_throw(q, "the antipode-inverse composite");
    const Bialgebra& bi = q.base.bialgebra;
    auto id_b = bi.ctx->identity(bi.carrier);
    auto tau_inv = bi.ctx->braiding_inverse(bi.carrier, bi.carrier);
    return s * (stored_u_star(q).tensor(stored_u(q)).tensor(id_b) *
                tensor_compose({id_b, tau_inv}, iterated_delta(bi)));
}

CheckList check_antipode_theorems(const CqtStructure& q,
                                  const std::string& subject) {
    CheckList out;
    if (!q.base.antipode) {
        out.push_back(make_skip("S^2 theorem", subject, kNoAntipode));
        out.push_back(make_skip("S^-1 theorem", subject, kNoAntipode));
        return out;
    }
    const CqtStructure qq = q;
    out.push_back(make_check("S^2 theorem", subject, [qq] {
        auto square = antipode_square_via_u(qq);
        auto same = expect_equal(square,
                                 *qq.base.antipode * *qq.base.antipode);
        if (!same.passed) return same;
        return expect_true(square.inverse().has_value(),
                           "the antipode-square composite is singular");
    }));
    out.push_back(make_check("S^-1 theorem", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto candidate = antipode_inverse_via_u(qq);
        auto left = expect_equal(candidate * *qq.base.antipode, id_b);
        if (!left.passed) return left;
        auto right = expect_equal(*qq.base.antipode * candidate, id_b);
        if (!right.passed) return right;
        auto solved = qq.base.antipode->inverse();
        if (!solved)
            return CheckOutcome{false, "the antipode matrix is singular"};
        return expect_equal(candidate, *solved);
    }));
    return out;
}

GradedMorphism yang_baxter_operator(const CqtStructure& q) {
    Coalgebra bb = tensor_square_coalgebra(q.base);
    auto half = tensor_compose({q.r_inv, q.base.innertwist()}, bb.delta);
    return tensor_compose({half, q.r}, bb.delta);
}

CheckList check_yang_baxter(const CqtStructure& q,
                            const std::string& subject) {
    CheckList out;
    const CqtStructure qq = q;
    out.push_back(make_check("YBE", subject, [qq] {
        const Bialgebra& bi = qq.base.bialgebra;
        auto id_b = bi.ctx->identity(bi.carrier);
        auto op = yang_baxter_operator(qq);
        if (!op.inverse())
            return CheckOutcome{false, "the Yang-Baxter operator is singular"};
        auto left = op.tensor(id_b);
        auto right = id_b.tensor(op);
        return expect_equal(left * right * left, right * left * right);
    }));
    out.push_back(make_check("R coalgebra morphism", subject, [qq] {
        Coalgebra bb = tensor_square_coalgebra(qq.base);
        auto op = yang_baxter_operator(qq);
        auto comult = expect_equal(bb.delta * op,
                                   tensor_compose({op, op}, bb.delta));
        if (!comult.passed) return comult;
        return expect_equal(bb.counit * op, bb.counit);
    }));
    return out;
}

CheckList check_cqt_all(const CentralBialgebra& b, const GradedMorphism& r,
                        const std::string& subject, bool include_hopf) {
    auto q = make_cqt(b, r);
    CheckList out = axiom_checks(b, r, q, subject);
    if (!q) {
        std::vector<std::string> rest;
        rest.push_back("eq (rsm)");
        rest.push_back("r-sigma commute (diagnostic)");
        if (include_hopf) {
            rest.push_back("Lemma rrs (i)");
            rest.push_back("Lemma rrs (ii)");
        }
        rest.push_back("Lemma rrs (iii)");
        rest.push_back("Lemma rrs (iv)");
        rest.push_back("unit pairings (r)");
        rest.push_back("unit pairings (r*)");
        if (include_hopf) {
            rest.push_back("defu1 consistency (u)");
            rest.push_back("defu1 consistency (u*)");
            rest.push_back("Lemma uu (i)");
            rest.push_back("Lemma uu (ii)");
            rest.push_back("u inverse");
            rest.push_back("S^2 theorem");
            rest.push_back("S^-1 theorem");
        }
        rest.push_back("YBE");
        rest.push_back("R coalgebra morphism");
        for (const std::string& anchor : rest)
            out.push_back(make_skip(anchor, subject, kNotStarInvertible));
        return out;
    }
    auto extend = [&out](CheckList more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    extend(check_rsm(*q, subject));
    const CqtStructure qq = *q;
    out.push_back(make_check("r-sigma commute (diagnostic)", subject, [qq] {
        return CheckOutcome{true, r_sigma_commute(qq)
                                      ? "r and sigma commute"
                                      : "r and sigma do not commute"};
    }));
    extend(lemma_rrs_checks(*q, subject, include_hopf));
    extend(check_unit_pairings(*q, subject));
    if (include_hopf) {
        extend(check_defu1(*q, subject));
        extend(check_lemma_uu(*q, subject));
        extend(check_u_inverse(*q, subject));
        extend(check_antipode_theorems(*q, subject));
    }
    extend(check_yang_baxter(*q, subject));
    return out;
}

} // namespace innertwist

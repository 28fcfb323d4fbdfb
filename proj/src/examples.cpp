#include "innertwist/examples.hpp"

#include <algorithm>

namespace innertwist {

namespace {

std::string power_label(long i) {
    if (i == 0) return "1";
    if (i == 1) return "g";
    return "g" + std::to_string(i);
}

} // namespace

CqtExample build_group_algebra_cqt(long n, long k) {
    if (n < 1 || k < 0 || k >= n)
        throw StructuralError("group algebra parameters need n >= 1 and "
                              "0 <= k < n");
    auto ctx = make_trivial_context(n);
    auto f = ctx->field();
    std::vector<BasisVector> basis;
    for (long i = 0; i < n; ++i) basis.push_back({power_label(i), {}});
    auto carrier = GradedObject::simple("B", std::move(basis));

    Mat mult(f, n, n * n);
    Mat unit(f, n, 1);
    Mat delta(f, n * n, n);
    Mat counit(f, 1, n);
    Mat antipode(f, n, n);
    Mat pairing(f, 1, n * n);
    unit.at(0, 0) = CycScalar::one(f);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            mult.at((i + j) % n, i * n + j) = CycScalar::one(f);
            pairing.at(0, i * n + j) = CycScalar::root(f, (k * i * j) % n);
        }
        delta.at(i * n + i, i) = CycScalar::one(f);
        counit.at(0, i) = CycScalar::one(f);
        antipode.at((n - i) % n, i) = CycScalar::one(f);
    }

    auto square = carrier.tensor(carrier);
    Bialgebra b(ctx, carrier, ctx->morphism(square, carrier, mult),
                ctx->morphism(GradedObject(), carrier, unit),
                ctx->morphism(carrier, square, delta),
                ctx->morphism(carrier, GradedObject(), counit));
    CentralBialgebra cb(b, HalfBraiding::tautological(ctx, carrier),
                        ctx->morphism(carrier, carrier, antipode));
    return {"k[Z/" + std::to_string(n) + "] k=" + std::to_string(k),
            std::move(cb), ctx->morphism(square, GradedObject(), pairing)};
}

CqtExample build_exterior_line(long alpha) {
    auto f = CyclotomicField::make(2);
    GradingGroup g({2});
    auto ctx = make_context(f, g, Bicharacter::from_exponents(f, g, {{1}}));
    auto carrier = GradedObject::simple("L", {{"1", {0}}, {"v", {1}}});
    auto square = carrier.tensor(carrier);

    Mat mult(f, 2, 4);
    mult.at(0, 0) = CycScalar::one(f);
    mult.at(1, 1) = CycScalar::one(f);
    mult.at(1, 2) = CycScalar::one(f);
    Mat unit(f, 2, 1);
    unit.at(0, 0) = CycScalar::one(f);
    Mat delta(f, 4, 2);
    delta.at(0, 0) = CycScalar::one(f);
    delta.at(1, 1) = CycScalar::one(f);
    delta.at(2, 1) = CycScalar::one(f);
    Mat counit(f, 1, 2);
    counit.at(0, 0) = CycScalar::one(f);
    Mat antipode(f, 2, 2);
    antipode.at(0, 0) = CycScalar::one(f);
    antipode.at(1, 1) = CycScalar::from_int(f, -1);
    Mat pairing(f, 1, 4);
    pairing.at(0, 0) = CycScalar::one(f);
    pairing.at(0, 3) = CycScalar::from_int(f, alpha);

    Bialgebra b(ctx, carrier, ctx->morphism(square, carrier, mult),
                ctx->morphism(GradedObject(), carrier, unit),
                ctx->morphism(carrier, square, delta),
                ctx->morphism(carrier, GradedObject(), counit));
    CentralBialgebra cb(b, HalfBraiding::tautological(ctx, carrier),
                        ctx->morphism(carrier, carrier, antipode));
    return {"Lambda(v) alpha=" + std::to_string(alpha), std::move(cb),
            ctx->morphism(square, GradedObject(), pairing)};
}

CentralBialgebra build_sweedler() {
    auto ctx = make_trivial_context(1);
    auto f = ctx->field();
    auto carrier = GradedObject::simple(
        "H", {{"1", {}}, {"g", {}}, {"x", {}}, {"gx", {}}});
    auto square = carrier.tensor(carrier);
    auto one = CycScalar::one(f);
    auto minus = CycScalar::from_int(f, -1);

    // products: 1 central, g*g = 1, g*x = gx, g*gx = x, x*g = -gx,
    // gx*g = -x, and every product of two odd generators vanishes
    Mat mult(f, 4, 16);
    for (long j = 0; j < 4; ++j) mult.at(j, j) = one;          // 1 * b_j
    for (long i = 1; i < 4; ++i) mult.at(i, i * 4) = one;      // b_i * 1
    mult.at(0, 1 * 4 + 1) = one;    // g g = 1
    mult.at(3, 1 * 4 + 2) = one;    // g x = gx
    mult.at(2, 1 * 4 + 3) = one;    // g gx = x
    mult.at(3, 2 * 4 + 1) = minus;  // x g = -gx
    mult.at(2, 3 * 4 + 1) = minus;  // gx g = -x

    Mat unit(f, 4, 1);
    unit.at(0, 0) = one;

    // Delta 1 = 1 (x) 1, Delta g = g (x) g,
    // Delta x = x (x) 1 + g (x) x, Delta gx = gx (x) g + 1 (x) gx
    Mat delta(f, 16, 4);
    delta.at(0, 0) = one;
    delta.at(5, 1) = one;
    delta.at(8, 2) = one;
    delta.at(6, 2) = one;
    delta.at(13, 3) = one;
    delta.at(3, 3) = one;

    Mat counit(f, 1, 4);
    counit.at(0, 0) = one;
    counit.at(0, 1) = one;

    Bialgebra b(ctx, carrier, ctx->morphism(square, carrier, mult),
                ctx->morphism(GradedObject(), carrier, unit),
                ctx->morphism(carrier, square, delta),
                ctx->morphism(carrier, GradedObject(), counit));
    auto antipode = solve_antipode(b);
    if (!antipode)
        throw StructuralError(
            "the four-dimensional example lost its antipode");
    return CentralBialgebra(b, HalfBraiding::tautological(ctx, carrier),
                            *antipode);
}

SupportPattern full_support(const GradedObject& b) {
    SupportPattern out;
    for (long i = 0; i < b.dim(); ++i)
        for (long j = 0; j < b.dim(); ++j)
            out.push_back({b.label_of(i), b.label_of(j)});
    return out;
}

SupportPattern sweedler_support() {
    SupportPattern out;
    for (const char* a : {"1", "g"})
        for (const char* b : {"1", "g"}) out.push_back({a, b});
    for (const char* a : {"x", "gx"})
        for (const char* b : {"x", "gx"}) out.push_back({a, b});
    return out;
}

std::vector<GradedMorphism> cqt_ansatz_solver(const CentralBialgebra& b,
                                              const SupportPattern& support) {
    const ContextPtr& ctx = b.bialgebra.ctx;
    const FieldPtr& f = ctx->field();
    const GradingGroup& grp = ctx->group();
    const GradedObject& carrier = b.carrier();
    const long d = carrier.dim();

    auto index_of_label = [&](const std::string& label) {
        for (long i = 0; i < d; ++i)
            if (carrier.label_of(i) == label) return i;
        throw StructuralError("ansatz support names unknown basis vector '" +
                              label + "'");
    };

    // the unit as a basis vector, if it is one: its pairings are forced to
    // counit values by the unit-pairing identities
    long unit_index = -1;
    {
        const Mat& u = b.bialgebra.unit.matrix();
        long nonzero = -1;
        bool single = true;
        for (long i = 0; i < d; ++i) {
            if (u.at(i, 0).is_zero()) continue;
            if (nonzero >= 0 || !u.at(i, 0).is_one()) single = false;
            nonzero = i;
        }
        if (single && nonzero >= 0) unit_index = nonzero;
    }
    const Mat& counit = b.bialgebra.counit.matrix();

    Mat base(f, 1, d * d);
    std::vector<long> unknown_cols;
    for (const auto& [left, right] : support) {
        long i = index_of_label(left);
        long j = index_of_label(right);
        long col = i * d + j;
        Grade sum = grp.add(carrier.grade_of(i, grp),
                            carrier.grade_of(j, grp));
        if (!grp.same_grade(sum, grp.zero())) continue;  // forced to zero
        if (i == unit_index) {
            base.at(0, col) = counit.at(0, j);
        } else if (j == unit_index) {
            base.at(0, col) = counit.at(0, i);
        } else if (std::find(unknown_cols.begin(), unknown_cols.end(), col) ==
                   unknown_cols.end()) {
            unknown_cols.push_back(col);
        }
    }

    std::vector<CycScalar> palette{CycScalar::from_int(f, 0),
                                   CycScalar::one(f),
                                   CycScalar::from_int(f, -1)};
    for (long t = 1; t < f->order(); ++t) {
        for (const CycScalar& sign :
             {CycScalar::one(f), CycScalar::from_int(f, -1)}) {
            CycScalar v = sign * CycScalar::root(f, t);
            if (std::find(palette.begin(), palette.end(), v) == palette.end())
                palette.push_back(v);
        }
    }

    std::vector<GradedMorphism> found;
    std::vector<std::size_t> odometer(unknown_cols.size(), 0);
    for (;;) {
        Mat row = base;
        for (std::size_t p = 0; p < unknown_cols.size(); ++p)
            row.at(0, unknown_cols[p]) = palette[odometer[p]];
        auto r = ctx->morphism(carrier.tensor(carrier), GradedObject(), row);
        if (run_checks(check_cqt(b, r, "ansatz")).all_passed() &&
            run_checks(check_cqt_all(b, r, "ansatz")).all_passed())
            found.push_back(r);

        std::size_t p = 0;
        while (p < odometer.size() && ++odometer[p] == palette.size())
            odometer[p++] = 0;
        if (p == odometer.size()) break;
    }
    return found;
}

} // namespace innertwist

#include "innertwist/grading.hpp"

#include <sstream>

namespace innertwist {

GradingGroup::GradingGroup(std::vector<long> moduli)
    : moduli_(std::move(moduli)) {
    for (long n : moduli_)
        if (n < 1) throw StructuralError("grading group moduli must be >= 1");
}

long GradingGroup::order() const {
    long o = 1;
    for (long n : moduli_) o *= n;
    return o;
}

void GradingGroup::require_rank(const Grade& g) const {
    if (g.size() != moduli_.size()) {
        std::ostringstream msg;
        msg << "grade has " << g.size() << " components, group has rank "
            << moduli_.size();
        throw StructuralError(msg.str());
    }
}

Grade GradingGroup::normalize(Grade g) const {
    require_rank(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        long n = moduli_[i];
        g[i] = ((g[i] % n) + n) % n;
    }
    return g;
}

Grade GradingGroup::add(const Grade& a, const Grade& b) const {
    require_rank(a);
    require_rank(b);
    Grade out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return normalize(std::move(out));
}

Grade GradingGroup::negate(const Grade& a) const {
    require_rank(a);
    Grade out(a);
    for (long& x : out) x = -x;
    return normalize(std::move(out));
}

bool GradingGroup::same_grade(const Grade& a, const Grade& b) const {
    return normalize(a) == normalize(b);
}

long GradingGroup::index_of(const Grade& g) const {
    Grade n = normalize(g);
    long idx = 0;
    for (std::size_t i = 0; i < n.size(); ++i) idx = idx * moduli_[i] + n[i];
    return idx;
}

Grade GradingGroup::element(long index) const {
    if (index < 0 || index >= order())
        throw StructuralError("group element index out of range");
    Grade g(moduli_.size(), 0);
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        g[i] = index % moduli_[i];
        index /= moduli_[i];
    }
    return g;
}

Bicharacter Bicharacter::from_exponents(
    FieldPtr f, GradingGroup g, const std::vector<std::vector<long>>& E) {
    const long rank = g.rank();
    if (static_cast<long>(E.size()) != rank)
        throw StructuralError("exponent matrix rank mismatch");
    for (const auto& row : E)
        if (static_cast<long>(row.size()) != rank)
            throw StructuralError("exponent matrix is not square");
    const long n = f->order();
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) {
            if ((g.moduli()[i] * E[i][j]) % n != 0 ||
                (E[i][j] * g.moduli()[j]) % n != 0) {
                std::ostringstream msg;
                msg << "exponent matrix entry E[" << i << "][" << j << "] = "
                    << E[i][j]
                    << " does not define a bicharacter on this group over "
                       "order "
                    << n;
                throw StructuralError(msg.str());
            }
        }

    Bicharacter chi;
    chi.field_ = f;
    chi.group_ = g;
    const long order = g.order();
    chi.table_.reserve(static_cast<std::size_t>(order) * order);
    for (long a = 0; a < order; ++a) {
        Grade ga = g.element(a);
        for (long b = 0; b < order; ++b) {
            Grade gb = g.element(b);
            long exp = 0;
            for (long i = 0; i < rank; ++i)
                for (long j = 0; j < rank; ++j) exp += ga[i] * E[i][j] * gb[j];
            chi.table_.push_back(CycScalar::root(f, exp));
        }
    }
    return chi;
}

Bicharacter Bicharacter::from_table(FieldPtr f, GradingGroup g,
                                    std::vector<CycScalar> table) {
    const long order = g.order();
    if (static_cast<long>(table.size()) != order * order)
        throw StructuralError("bicharacter table size mismatch");
    for (const CycScalar& s : table)
        if (s.is_null() || s.field()->order() != f->order())
            throw StructuralError("bicharacter table entry from a different field");
    Bicharacter chi;
    chi.field_ = std::move(f);
    chi.group_ = std::move(g);
    chi.table_ = std::move(table);
    return chi;
}

CycScalar Bicharacter::value(const Grade& a, const Grade& b) const {
    if (is_null()) throw StructuralError("value of a null bicharacter");
    return table_[static_cast<std::size_t>(group_.index_of(a)) *
                      group_.order() +
                  group_.index_of(b)];
}

CycScalar Bicharacter::inverse_value(const Grade& a, const Grade& b) const {
    return value(a, b).inverse();
}

bool Bicharacter::is_multiplicative() const {
    if (is_null()) throw StructuralError("null bicharacter");
    const long order = group_.order();
    for (long a = 0; a < order; ++a)
        for (long b = 0; b < order; ++b) {
            Grade ga = group_.element(a), gb = group_.element(b);
            Grade ab = group_.add(ga, gb);
            for (long c = 0; c < order; ++c) {
                Grade gc = group_.element(c);
                if (value(ab, gc) != value(ga, gc) * value(gb, gc))
                    return false;
                if (value(gc, ab) != value(gc, ga) * value(gc, gb))
                    return false;
            }
        }
    return true;
}

} // namespace innertwist

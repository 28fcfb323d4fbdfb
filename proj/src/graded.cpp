#include "innertwist/graded.hpp"

#include <set>
#include <sstream>

namespace innertwist {

GradedObject GradedObject::simple(std::string name,
                                  std::vector<BasisVector> basis) {
    if (basis.empty())
        throw StructuralError("object '" + name + "' has an empty basis");
    std::set<std::string> seen;
    for (const BasisVector& b : basis) {
        if (!seen.insert(b.label).second)
            throw StructuralError("object '" + name +
                                  "' repeats basis label '" + b.label + "'");
        if (b.grade.size() != basis.front().grade.size())
            throw StructuralError("object '" + name +
                                  "' mixes grade ranks in its basis");
    }
    GradedObject v;
    v.atoms_.push_back(
        std::make_shared<Atom>(Atom{std::move(name), std::move(basis)}));
    return v;
}

GradedObject GradedObject::tensor(const GradedObject& o) const {
    GradedObject out = *this;
    out.atoms_.insert(out.atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    return out;
}

GradedObject GradedObject::dual() const {
    GradedObject out;
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
        Atom d;
        d.name = (*it)->name + "*";
        for (const BasisVector& b : (*it)->basis) {
            Grade neg = b.grade;
            for (long& x : neg) x = -x;
            d.basis.push_back(BasisVector{b.label + "*", std::move(neg)});
        }
        out.atoms_.push_back(std::make_shared<Atom>(std::move(d)));
    }
    return out;
}

GradedObject GradedObject::factor(long k) const {
    return slice(k, k + 1);
}

GradedObject GradedObject::slice(long begin, long end) const {
    if (begin < 0 || end < begin || end > factor_count())
        throw StructuralError("factor slice out of range");
    GradedObject out;
    out.atoms_.assign(atoms_.begin() + begin, atoms_.begin() + end);
    return out;
}

long GradedObject::dim() const {
    long d = 1;
    for (const AtomPtr& a : atoms_) d *= static_cast<long>(a->basis.size());
    return d;
}

Grade GradedObject::grade_of(long i, const GradingGroup& g) const {
    if (i < 0 || i >= dim())
        throw StructuralError("basis index out of range");
    Grade total = g.zero();
    for (std::size_t k = atoms_.size(); k-- > 0;) {
        long d = static_cast<long>(atoms_[k]->basis.size());
        total = g.add(total, atoms_[k]->basis[static_cast<std::size_t>(i % d)].grade);
        i /= d;
    }
    return total;
}

std::string GradedObject::label_of(long i) const {
    if (i < 0 || i >= dim())
        throw StructuralError("basis index out of range");
    if (atoms_.empty()) return "1";
    std::vector<std::string> parts(atoms_.size());
    for (std::size_t k = atoms_.size(); k-- > 0;) {
        long d = static_cast<long>(atoms_[k]->basis.size());
        parts[k] = atoms_[k]->basis[static_cast<std::size_t>(i % d)].label;
        i /= d;
    }
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += "(x)" + parts[k];
    return out;
}

std::string GradedObject::name() const {
    if (atoms_.empty()) return "I";
    std::string out = atoms_[0]->name;
    for (std::size_t k = 1; k < atoms_.size(); ++k)
        out += "(x)" + atoms_[k]->name;
    return out;
}

long GradedObject::index_of(const std::vector<long>& parts) const {
    if (parts.size() != atoms_.size())
        throw StructuralError("factor index tuple has wrong length");
    long idx = 0;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        long d = static_cast<long>(atoms_[k]->basis.size());
        if (parts[k] < 0 || parts[k] >= d)
            throw StructuralError("factor index out of range");
        idx = idx * d + parts[k];
    }
    return idx;
}

bool GradedObject::operator==(const GradedObject& o) const {
    if (atoms_.size() != o.atoms_.size()) return false;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        if (atoms_[k] == o.atoms_[k]) continue; // same shared atom
        if (!(*atoms_[k] == *o.atoms_[k])) return false;
    }
    return true;
}

GradedMorphism::GradedMorphism(GradedObject src, GradedObject dst, Mat mat)
    : src_(std::move(src)), dst_(std::move(dst)), m(std::move(mat)) {
    if (m.is_null()) throw StructuralError("morphism needs a matrix");
    if (m.rows() != dst_.dim() || m.cols() != src_.dim()) {
        std::ostringstream msg;
        msg << "morphism matrix is " << m.rows() << "x" << m.cols()
            << ", expected " << dst_.dim() << "x" << src_.dim();
        throw StructuralError(msg.str());
    }
}

bool GradedMorphism::is_homogeneous(const GradingGroup& g) const {
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() &&
                !g.same_grade(dst_.grade_of(r, g), src_.grade_of(c, g)))
                return false;
    return true;
}

GradedMorphism GradedMorphism::operator*(const GradedMorphism& g) const {
    if (!(g.dst_ == src_))
        throw StructuralError(
            "composition mismatch: inner morphism does not land in the outer "
            "morphism's source");
    return GradedMorphism(g.src_, dst_, m * g.m);
}

GradedMorphism GradedMorphism::operator+(const GradedMorphism& o) const {
    if (!(src_ == o.src_) || !(dst_ == o.dst_))
        throw StructuralError("sum of morphisms with different types");
    return GradedMorphism(src_, dst_, m + o.m);
}

GradedMorphism GradedMorphism::operator-(const GradedMorphism& o) const {
    if (!(src_ == o.src_) || !(dst_ == o.dst_))
        throw StructuralError("difference of morphisms with different types");
    return GradedMorphism(src_, dst_, m - o.m);
}

GradedMorphism GradedMorphism::scaled(const CycScalar& s) const {
    return GradedMorphism(src_, dst_, m.scaled(s));
}

GradedMorphism GradedMorphism::tensor(const GradedMorphism& o) const {
    return GradedMorphism(src_.tensor(o.src_), dst_.tensor(o.dst_),
                          m.kron(o.m));
}

bool GradedMorphism::operator==(const GradedMorphism& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && m == o.m;
}

bool GradedMorphism::is_identity() const {
    return src_ == dst_ && m.is_identity();
}

std::optional<GradedMorphism> GradedMorphism::inverse() const {
    auto inv = m.inverse();
    if (!inv) return std::nullopt;
    return GradedMorphism(dst_, src_, std::move(*inv));
}

namespace {

struct TensorEnds {
    GradedObject src;
    GradedObject dst;
    std::vector<Mat> mats;
};

TensorEnds collect_factors(const std::vector<GradedMorphism>& factors,
                           const char* what) {
    if (factors.empty())
        throw StructuralError(std::string(what) +
                              " needs at least one factor");
    TensorEnds ends{factors.front().source(), factors.front().target(), {}};
    ends.mats.reserve(factors.size());
    ends.mats.push_back(factors.front().matrix());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        ends.src = ends.src.tensor(factors[i].source());
        ends.dst = ends.dst.tensor(factors[i].target());
        ends.mats.push_back(factors[i].matrix());
    }
    return ends;
}

}  // namespace

GradedMorphism tensor_compose(const std::vector<GradedMorphism>& factors,
                              const GradedMorphism& g) {
    TensorEnds ends = collect_factors(factors, "tensor_compose");
    if (!(ends.src == g.target()))
        throw StructuralError("tensor_compose: factors consume " +
                              ends.src.name() +
                              " but the inner morphism lands in " +
                              g.target().name());
    return GradedMorphism(g.source(), ends.dst,
                          kron_compose(ends.mats, g.matrix()));
}

GradedMorphism compose_tensor(const GradedMorphism& f,
                              const std::vector<GradedMorphism>& factors) {
    TensorEnds ends = collect_factors(factors, "compose_tensor");
    if (!(ends.dst == f.source()))
        throw StructuralError("compose_tensor: factors produce " +
                              ends.dst.name() +
                              " but the outer morphism consumes " +
                              f.source().name());
    return GradedMorphism(ends.src, f.target(),
                          compose_kron(f.matrix(), ends.mats));
}

BraidedContext::BraidedContext(FieldPtr f, GradingGroup g, Bicharacter chi)
    : field_(std::move(f)), group_(std::move(g)), chi_(std::move(chi)) {
    if (!field_) throw StructuralError("context needs a field");
    if (chi_.is_null())
        throw StructuralError("context needs a bicharacter");
    if (!(chi_.group() == group_) ||
        chi_.field()->order() != field_->order())
        throw StructuralError("bicharacter does not match the context");
}

GradedMorphism BraidedContext::identity(const GradedObject& v) const {
    return GradedMorphism(v, v, Mat::identity(field_, v.dim()));
}

GradedMorphism BraidedContext::zero_morphism(const GradedObject& src,
                                             const GradedObject& dst) const {
    return GradedMorphism(src, dst, Mat(field_, dst.dim(), src.dim()));
}

GradedMorphism BraidedContext::morphism(GradedObject src, GradedObject dst,
                                        Mat m) const {
    GradedMorphism f(std::move(src), std::move(dst), std::move(m));
    for (long r = 0; r < f.matrix().rows(); ++r)
        for (long c = 0; c < f.matrix().cols(); ++c)
            if (!f.matrix().at(r, c).is_zero() &&
                !group_.same_grade(f.target().grade_of(r, group_),
                                   f.source().grade_of(c, group_))) {
                std::ostringstream msg;
                msg << "matrix entry (" << f.target().label_of(r) << " <- "
                    << f.source().label_of(c)
                    << ") violates grade preservation";
                throw StructuralError(msg.str());
            }
    return f;
}

GradedMorphism BraidedContext::braiding(const GradedObject& v,
                                        const GradedObject& w) const {
    const long dv = v.dim(), dw = w.dim();
    Mat m(field_, dw * dv, dv * dw);
    for (long i = 0; i < dv; ++i) {
        Grade gi = v.grade_of(i, group_);
        for (long j = 0; j < dw; ++j) {
            Grade gj = w.grade_of(j, group_);
            m.at(j * dv + i, i * dw + j) = chi_.value(gi, gj);
        }
    }
    return GradedMorphism(v.tensor(w), w.tensor(v), std::move(m));
}

GradedMorphism BraidedContext::braiding_inverse(const GradedObject& v,
                                                const GradedObject& w) const {
    const long dv = v.dim(), dw = w.dim();
    Mat m(field_, dw * dv, dv * dw);
    for (long i = 0; i < dv; ++i) {
        Grade gi = v.grade_of(i, group_);
        for (long j = 0; j < dw; ++j) {
            Grade gj = w.grade_of(j, group_);
            m.at(j * dv + i, i * dw + j) = chi_.inverse_value(gj, gi);
        }
    }
    return GradedMorphism(v.tensor(w), w.tensor(v), std::move(m));
}

GradedMorphism BraidedContext::ev(const GradedObject& v) const {
    if (v.factor_count() != 1)
        throw StructuralError("evaluation is defined for simple objects");
    const long d = v.dim();
    Mat m(field_, 1, d * d);
    for (long i = 0; i < d; ++i)
        m.at(0, i * d + i) = CycScalar::one(field_);
    return GradedMorphism(v.dual().tensor(v), GradedObject(), std::move(m));
}

GradedMorphism BraidedContext::db(const GradedObject& v) const {
    if (v.factor_count() != 1)
        throw StructuralError("coevaluation is defined for simple objects");
    const long d = v.dim();
    Mat m(field_, d * d, 1);
    for (long i = 0; i < d; ++i)
        m.at(i * d + i, 0) = CycScalar::one(field_);
    return GradedMorphism(GradedObject(), v.tensor(v.dual()), std::move(m));
}

ContextPtr make_context(FieldPtr f, GradingGroup g, Bicharacter chi) {
    return std::make_shared<const BraidedContext>(std::move(f), std::move(g),
                                                  std::move(chi));
}

ContextPtr make_trivial_context(long field_order) {
    auto f = CyclotomicField::make(field_order);
    GradingGroup g;
    auto chi = Bicharacter::from_exponents(f, g, {});
    return make_context(std::move(f), std::move(g), std::move(chi));
}

} // namespace innertwist

#include "innertwist/itwfile.hpp"

#include <fstream>
#include <sstream>

namespace innertwist {

namespace {

class Parser {
public:
    StructureSession run(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream toks(raw);
            std::string keyword;
            if (!(toks >> keyword)) continue;
            dispatch(keyword, toks, raw);
        }
        ++line_;
        finish_section();
        if (field_order_ >= 1) ensure_context();
        assemble_bialgebra();
        return std::move(session_);
    }

private:
    enum class Mode { None, Object, Morphism };

    void dispatch(const std::string& keyword, std::istringstream& toks,
                  const std::string& raw) {
        if (keyword == "basis") return basis_line(toks);
        if (keyword == "entry") return entry_line(toks, raw);
        finish_section();
        if (keyword == "field") return field_line(toks);
        if (keyword == "group") return group_line(toks);
        if (keyword == "chi") return chi_line(toks);
        if (keyword == "object") return object_line(toks);
        if (keyword == "morphism") return morphism_line(toks);
        if (keyword == "bialgebra") return bialgebra_line(toks);
        if (keyword == "antipode") return antipode_line(toks);
        if (keyword == "sigma") return sigma_line(toks);
        if (keyword == "cqt") return cqt_line(toks);
        throw ParseError("unknown directive '" + keyword + "'", line_, 1);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, 0);
    }

    long read_long(std::istringstream& toks, const char* what) {
        long v;
        if (!(toks >> v)) fail(std::string("expected ") + what);
        return v;
    }

    std::string read_name(std::istringstream& toks, const char* what) {
        std::string v;
        if (!(toks >> v)) fail(std::string("expected ") + what);
        return v;
    }

    void require_done(std::istringstream& toks) {
        std::string extra;
        if (toks >> extra) fail("unexpected trailing token '" + extra + "'");
    }

    // --- context -----------------------------------------------------

    void field_line(std::istringstream& toks) {
        if (ctx_made_) fail("'field' must precede every object");
        if (field_order_ >= 1) fail("'field' declared twice");
        field_order_ = read_long(toks, "a field order");
        if (field_order_ < 1) fail("the field order must be at least 1");
        require_done(toks);
    }

    void group_line(std::istringstream& toks) {
        if (ctx_made_) fail("'group' must precede every object");
        if (!moduli_.empty()) fail("'group' declared twice");
        long m;
        while (toks >> m) {
            if (m < 1) fail("group moduli must be at least 1");
            moduli_.push_back(m);
        }
        if (moduli_.empty()) fail("'group' needs at least one modulus");
    }

    void chi_line(std::istringstream& toks) {
        if (ctx_made_) fail("'chi' must precede every object");
        if (!chi_rows_.empty()) fail("'chi' declared twice");
        chi_rows_.emplace_back();
        std::string tok;
        while (toks >> tok) {
            if (tok == ";") {
                chi_rows_.emplace_back();
                continue;
            }
            try {
                chi_rows_.back().push_back(std::stol(tok));
            } catch (const std::exception&) {
                fail("expected an integer exponent, got '" + tok + "'");
            }
        }
    }

    void ensure_context() {
        if (ctx_made_) return;
        if (field_order_ < 1) fail("declare 'field n' first");
        if (moduli_.empty()) {
            if (!chi_rows_.empty()) fail("'chi' needs a 'group'");
            session_.ctx = make_trivial_context(field_order_);
        } else {
            auto f = CyclotomicField::make(field_order_);
            GradingGroup g(moduli_);
            std::vector<std::vector<long>> e = chi_rows_;
            if (e.empty())
                e.assign(g.rank(), std::vector<long>(g.rank(), 0));
            if (static_cast<long>(e.size()) != g.rank())
                fail("'chi' needs one row per group factor");
            for (const auto& row : e)
                if (static_cast<long>(row.size()) != g.rank())
                    fail("'chi' rows need one exponent per group factor");
            session_.ctx =
                make_context(f, g, Bicharacter::from_exponents(f, g, e));
        }
        ctx_made_ = true;
    }

    // --- objects -----------------------------------------------------

    void object_line(std::istringstream& toks) {
        ensure_context();
        obj_name_ = read_name(toks, "an object name");
        require_done(toks);
        if (session_.objects.count(obj_name_))
            fail("object '" + obj_name_ + "' declared twice");
        obj_basis_.clear();
        obj_line_ = line_;
        mode_ = Mode::Object;
    }

    void basis_line(std::istringstream& toks) {
        if (mode_ != Mode::Object) fail("'basis' outside an object block");
        BasisVector v;
        v.label = read_name(toks, "a basis label");
        long rank = session_.ctx->group().rank();
        for (long k = 0; k < rank; ++k)
            v.grade.push_back(read_long(toks, "a degree component"));
        require_done(toks);
        obj_basis_.push_back(std::move(v));
    }

    // --- morphisms ---------------------------------------------------

    GradedObject resolve_expr(std::string expr) {
        std::erase_if(expr, [](char c) { return c == ' ' || c == '\t'; });
        if (expr.empty()) fail("empty object expression");
        if (expr == "I") return GradedObject();
        GradedObject out;
        bool first = true;
        std::size_t start = 0;
        while (start <= expr.size()) {
            auto stop = expr.find('*', start);
            if (stop == std::string::npos) stop = expr.size();
            std::string part = expr.substr(start, stop - start);
            auto it = session_.objects.find(part);
            if (it == session_.objects.end())
                fail("unknown object '" + part + "'");
            out = first ? it->second : out.tensor(it->second);
            first = false;
            start = stop + 1;
        }
        return out;
    }

    void morphism_line(std::istringstream& toks) {
        ensure_context();
        mor_name_ = read_name(toks, "a morphism name");
        if (session_.morphisms.count(mor_name_))
            fail("morphism '" + mor_name_ + "' declared twice");
        std::string src, dst, tok;
        bool arrow = false;
        while (toks >> tok) {
            if (tok == "->") {
                if (arrow) fail("two '->' in one morphism declaration");
                arrow = true;
            } else {
                (arrow ? dst : src) += tok;
            }
        }
        if (!arrow) fail("morphism declaration needs 'Src -> Dst'");
        mor_src_ = resolve_expr(src);
        mor_dst_ = resolve_expr(dst);
        mor_mat_.emplace(session_.ctx->field(), mor_dst_.dim(),
                         mor_src_.dim());
        mor_line_ = line_;
        mode_ = Mode::Morphism;
    }

    void entry_line(std::istringstream& toks, const std::string& raw) {
        if (mode_ != Mode::Morphism) fail("'entry' outside a morphism block");
        long r = read_long(toks, "a row index");
        long c = read_long(toks, "a column index");
        if (r < 0 || r >= mor_mat_->rows() || c < 0 || c >= mor_mat_->cols())
            fail("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                 ") out of range for '" + mor_name_ + "' (" +
                 std::to_string(mor_mat_->rows()) + " x " +
                 std::to_string(mor_mat_->cols()) + ")");

        auto after = static_cast<std::size_t>(toks.tellg());
        auto start = raw.find_first_not_of(" \t", after);
        if (start == std::string::npos) fail("entry needs a scalar value");
        CycScalar value;
        try {
            value = parse_scalar(session_.ctx->field(), raw.substr(start));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_,
                             static_cast<int>(start) + e.column);
        }

        if (!mor_mat_->at(r, c).is_zero())
            fail("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                 ") of '" + mor_name_ + "' set twice");
        const GradingGroup& g = session_.ctx->group();
        if (!value.is_zero() &&
            !g.same_grade(mor_dst_.grade_of(r, g), mor_src_.grade_of(c, g)))
            fail("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                 ") of '" + mor_name_ + "' violates the grading: '" +
                 mor_dst_.label_of(r) + "' and '" + mor_src_.label_of(c) +
                 "' have different degrees");
        mor_mat_->at(r, c) = std::move(value);
    }

    // --- structures ----------------------------------------------------

    const GradedMorphism& lookup(const std::string& name) {
        auto it = session_.morphisms.find(name);
        if (it == session_.morphisms.end())
            fail("unknown morphism '" + name + "'");
        return it->second;
    }

    void bialgebra_line(std::istringstream& toks) {
        ensure_context();
        if (bial_) fail("only one bialgebra per file");
        session_.bialgebra_name = read_name(toks, "a bialgebra name");
        std::map<std::string, std::string> kv;
        std::string tok;
        while (toks >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
                fail("expected key=value, got '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        for (const char* key : {"mult", "unit", "delta", "counit"})
            if (!kv.count(key))
                fail(std::string("bialgebra needs ") + key + "=...");
        if (kv.size() != 4) fail("bialgebra takes exactly mult/unit/delta/counit");
        try {
            bial_.emplace(session_.ctx, lookup(kv["mult"]).target(),
                          lookup(kv["mult"]), lookup(kv["unit"]),
                          lookup(kv["delta"]), lookup(kv["counit"]));
        } catch (const StructuralError& e) {
            fail(e.what());
        }
    }

    void antipode_line(std::istringstream& toks) {
        if (!bial_) fail("'antipode' before the bialgebra");
        auto name = read_name(toks, "a morphism name");
        require_done(toks);
        const GradedMorphism& s = lookup(name);
        if (!(s.source() == bial_->carrier) || !(s.target() == bial_->carrier))
            fail("the antipode must map the bialgebra to itself");
        antipode_ = s;
    }

    void sigma_line(std::istringstream& toks) {
        auto kind = read_name(toks, "a half-braiding kind");
        require_done(toks);
        if (kind != "flip")
            fail("only the categorical flip half-braiding is supported");
    }

    void cqt_line(std::istringstream& toks) {
        if (!bial_) fail("'cqt' before the bialgebra");
        auto name = read_name(toks, "a morphism name");
        require_done(toks);
        const GradedMorphism& r = lookup(name);
        if (!(r.source() == bial_->carrier.tensor(bial_->carrier)) ||
            !(r.target() == GradedObject()))
            fail("the pairing must map B*B to I");
        session_.pairing = r;
    }

    // --- section lifecycle -------------------------------------------

    void finish_section() {
        if (mode_ == Mode::Object) {
            if (obj_basis_.empty())
                throw ParseError(
                    "object '" + obj_name_ + "' has no basis vectors",
                    obj_line_, 0);
            session_.objects.emplace(
                obj_name_, GradedObject::simple(obj_name_, obj_basis_));
        } else if (mode_ == Mode::Morphism) {
            try {
                session_.morphisms.emplace(
                    mor_name_, session_.ctx->morphism(mor_src_, mor_dst_,
                                                      std::move(*mor_mat_)));
            } catch (const StructuralError& e) {
                throw ParseError(e.what(), mor_line_, 0);
            }
        }
        mode_ = Mode::None;
    }

    void assemble_bialgebra() {
        if (!bial_) return;
        session_.bialgebra.emplace(
            *bial_,
            HalfBraiding::tautological(session_.ctx, bial_->carrier),
            antipode_);
    }

    StructureSession session_;
    int line_ = 0;
    Mode mode_ = Mode::None;

    long field_order_ = 0;
    std::vector<long> moduli_;
    std::vector<std::vector<long>> chi_rows_;
    bool ctx_made_ = false;

    std::string obj_name_;
    std::vector<BasisVector> obj_basis_;
    int obj_line_ = 0;

    std::string mor_name_;
    GradedObject mor_src_, mor_dst_;
    std::optional<Mat> mor_mat_;
    int mor_line_ = 0;

    std::optional<Bialgebra> bial_;
    std::optional<GradedMorphism> antipode_;
};

} // namespace

StructureSession parse_structure_text(const std::string& text) {
    return Parser().run(text);
}

StructureSession parse_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure_text(buf.str());
}

} // namespace innertwist

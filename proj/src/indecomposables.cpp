#include "spv/indecomposables.hpp"

#include "spv/centralizers.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace spv {

namespace {

Matrix jordan_block(const FieldSpec& spec, std::size_t n) {
    // Cyclic convention x e_i = e_{i+1}, x e_n = 0: ones on the subdiagonal.
    Matrix j(spec, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i + 1, i) = 1;
    return j;
}

} // namespace

std::string IndecompLabel::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case IndecompKind::V: os << "V" << 2 * m; break;
        case IndecompKind::W: os << "W" << m; break;
        case IndecompKind::Wl: os << "Wl" << m << ":" << ell; break;
    }
    return os.str();
}

bool canonical_less(const IndecompLabel& a, const IndecompLabel& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.m != b.m) return a.m > b.m;
    return a.ell < b.ell;
}

OrthogonalType::OrthogonalType(std::vector<IndecompLabel> ls) : labels(std::move(ls)) {
    if (labels.empty()) throw InvariantViolation("orthogonal type needs at least one label");
    for (const auto& l : labels) {
        if (l.m == 0) throw InvariantViolation("label size parameter must be positive");
        if (l.kind == IndecompKind::Wl && !(0 < l.ell && 2 * l.ell < l.m))
            throw EllOutOfRange("Wl label requires 0 < ell < m/2");
    }
    std::sort(labels.begin(), labels.end(), canonical_less);
}

std::size_t OrthogonalType::total_dim() const {
    std::size_t t = 0;
    for (const auto& l : labels) t += l.module_dim();
    return t;
}

bool OrthogonalType::all_v_kind() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](const IndecompLabel& l) { return l.kind == IndecompKind::V; });
}

std::string OrthogonalType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += "+";
        out += labels[i].to_string();
    }
    return out;
}

OrthogonalType OrthogonalType::parse(const std::string& text) {
    std::vector<IndecompLabel> labels;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(pos, end - pos);
        pos = end + 1;
        if (tok.empty()) throw ParseError("empty label in orthogonal type");
        IndecompLabel l;
        std::size_t num_at = 0;
        if (tok.rfind("Wl", 0) == 0) {
            l.kind = IndecompKind::Wl;
            num_at = 2;
        } else if (tok[0] == 'W') {
            l.kind = IndecompKind::W;
            num_at = 1;
        } else if (tok[0] == 'V') {
            l.kind = IndecompKind::V;
            num_at = 1;
        } else {
            throw ParseError("unknown label kind in '" + tok + "'");
        }
        const std::string rest = tok.substr(num_at);
        std::istringstream is(rest);
        std::size_t param = 0;
        char colon = 0;
        if (!(is >> param) || param == 0) throw ParseError("bad size in '" + tok + "'");
        if (l.kind == IndecompKind::Wl) {
            if (!(is >> colon >> l.ell) || colon != ':')
                throw ParseError("Wl label needs ':ell' in '" + tok + "'");
        } else if (is >> colon) {
            throw ParseError("trailing characters in '" + tok + "'");
        }
        if (l.kind == IndecompKind::V) {
            if (param % 2 != 0)
                throw ParseError("V label parameter must be even in '" + tok + "'");
            l.m = param / 2;
        } else {
            l.m = param;
        }
        labels.push_back(l);
    }
    return OrthogonalType(std::move(labels));
}

std::size_t JordanType::total() const {
    std::size_t t = 0;
    for (std::size_t p : parts) t += p;
    return t;
}

std::string JordanType::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

BuiltElement build_V(const FieldSpec& spec, std::size_t m) {
    if (m == 0) throw InvariantViolation("build_V requires m >= 1");
    SymplecticSpace space = SymplecticSpace::antidiagonal(spec, m);
    Matrix x = jordan_block(spec, 2 * m);
    assert(in_sp(x, space));
    return {std::move(space), std::move(x)};
}

BuiltElement build_W(const FieldSpec& spec, std::size_t m) {
    if (m == 0) throw InvariantViolation("build_W requires m >= 1");
    SymplecticSpace space = SymplecticSpace::block_split(spec, m);
    Matrix j = jordan_block(spec, m);
    Matrix x(spec, 2 * m, 2 * m);
    x.set_block(0, 0, j);
    x.set_block(m, m, j.transpose());
    assert(in_sp(x, space));
    return {std::move(space), std::move(x)};
}

namespace {

BuiltElement make_wl_element(const FieldSpec& spec, std::size_t m, const Matrix& b) {
    SymplecticSpace space = SymplecticSpace::block_split(spec, m);
    Matrix j = jordan_block(spec, m);
    Matrix x(spec, 2 * m, 2 * m);
    x.set_block(0, 0, j);
    x.set_block(m, m, j.transpose());
    x.set_block(0, m, b);
    return {std::move(space), std::move(x)};
}

} // namespace

BuiltElement build_Wl(const FieldSpec& spec, std::size_t m, std::size_t ell,
                      const std::optional<Matrix>& b, std::uint64_t budget) {
    if (!(0 < ell && 2 * ell < m))
        throw EllOutOfRange("Wl requires 0 < ell < m/2");
    if (b) {
        if (!b->is_symmetric() || b->rows() != m)
            throw ShapeError("Wl glue block must be a symmetric m x m matrix");
        BuiltElement built = make_wl_element(spec, m, *b);
        if (!(jordan_type_of(built.x) == JordanType{{m, m}}))
            throw BadJordanType("glue block does not yield Jordan type (m, m)");
        LieElement x(built.space, built.x);
        std::map<std::uint64_t, std::uint64_t> counts;
        for (std::uint64_t q : {std::uint64_t(2), std::uint64_t(4)})
            counts[q] = group_centralizer_count(x, q, budget);
        const DimEstimate est = group_dim_estimate(counts);
        if (3 * m < est.dim || (3 * m - est.dim) % 2 != 0)
            throw BadJordanType("group count does not fit the 3m - 2l pattern");
        const std::size_t realized = (3 * m - est.dim) / 2;
        if (!(0 < realized && 2 * realized < m))
            throw EllOutOfRange("realized ell is outside (0, m/2)");
        if (realized != ell)
            throw EllOutOfRange("glue block realizes a different ell");
        return built;
    }
    for (const WlCandidate& cand : wl_search(spec, m, {2, 4}, budget)) {
        if (cand.two_blocks && cand.ell_realized == ell &&
            0 < cand.ell_realized && 2 * cand.ell_realized < m)
            return make_wl_element(spec, m, cand.b);
    }
    throw EllOutOfRange("no single-entry glue block realizes the requested ell");
}

BuiltElement assemble(const FieldSpec& spec, const OrthogonalType& type, std::uint64_t budget) {
    std::optional<BuiltElement> acc;
    for (const IndecompLabel& l : type.labels) {
        BuiltElement part = l.kind == IndecompKind::V ? build_V(spec, l.m)
                            : l.kind == IndecompKind::W
                                ? build_W(spec, l.m)
                                : build_Wl(spec, l.m, l.ell, std::nullopt, budget);
        if (!acc) {
            acc = std::move(part);
        } else {
            acc = BuiltElement{SymplecticSpace::orthogonal_sum(acc->space, part.space),
                               Matrix::direct_sum(acc->x, part.x)};
        }
    }
    assert(in_sp(acc->x, acc->space));
    return std::move(*acc);
}

JordanType jordan_type_of(const Matrix& x) {
    if (!is_nilpotent(x)) throw NotNilpotent("jordan_type_of expects a nilpotent matrix");
    const std::size_t n = x.rows();
    std::vector<std::size_t> ranks{n}; // rank of x^0
    Matrix p = Matrix::identity(x.field(), n);
    while (ranks.back() > 0) {
        p = p * x;
        ranks.push_back(p.rank());
    }
    // parts_ge[j] = #parts >= j = rank(x^{j-1}) - rank(x^j)
    std::vector<std::size_t> parts;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
        const std::size_t ge_j = ranks[j - 1] - ranks[j];
        const std::size_t ge_j1 =
            j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
        for (std::size_t c = ge_j1; c < ge_j; ++c) parts.push_back(j);
    }
    std::sort(parts.rbegin(), parts.rend());
    return JordanType{std::move(parts)};
}

std::size_t hom_dim(std::size_t a, std::size_t b) { return std::min(a, b); }

std::size_t hom_dim_computed(std::size_t a, std::size_t b, const FieldSpec& spec) {
    // kernel of M -> M J_a + J_b M on b x a matrices
    Matrix ja = jordan_block(spec, a);
    Matrix jb = jordan_block(spec, b);
    Matrix op(spec, a * b, a * b);
    std::size_t col = 0;
    for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < a; ++c, ++col) {
            Matrix e(spec, b, a);
            e(r, c) = 1;
            Matrix img = e * ja + jb * e;
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = 0; j < a; ++j) op(i * a + j, col) = img(i, j);
        }
    }
    return op.nullity();
}

std::size_t group_dim_from_type(const OrthogonalType& type) {
    std::vector<IndecompLabel> labels = type.labels;
    std::size_t total = 0;
    while (!labels.empty()) {
        // peel the label holding the smallest Jordan block
        std::size_t pick = 0;
        for (std::size_t i = 1; i < labels.size(); ++i) {
            if (labels[i].block_size() < labels[pick].block_size()) pick = i;
        }
        const IndecompLabel w = labels[pick];
        labels.erase(labels.begin() + pick);
        std::size_t base = 0;
        switch (w.kind) {
            case IndecompKind::V: base = w.m; break;
            case IndecompKind::W: base = 3 * w.m; break;
            case IndecompKind::Wl: base = 3 * w.m - 2 * w.ell; break;
        }
        std::size_t r = w.block_count();
        for (const auto& l : labels) r += l.block_count();
        const std::size_t tr = w.block_size();
        const std::size_t cross =
            w.kind == IndecompKind::V ? (r - 1) * tr : 2 * (r - 2) * tr;
        total += base + cross;
    }
    return total;
}

std::vector<WlCandidate> wl_search(const FieldSpec& spec, std::size_t m,
                                   const std::vector<std::uint64_t>& fields,
                                   std::uint64_t budget) {
    std::vector<WlCandidate> out;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            WlCandidate cand;
            cand.row = i;
            cand.col = j;
            Matrix b(spec, m, m);
            b(i, j) = 1;
            b(j, i) = 1;
            cand.b = std::move(b);
            BuiltElement built = make_wl_element(spec, m, cand.b);
            cand.jordan = jordan_type_of(built.x);
            cand.two_blocks = cand.jordan == JordanType{{m, m}};
            LieElement x(built.space, built.x);
            cand.lie_dim = lie_centralizer_dim(x);
            for (std::uint64_t q : fields)
                cand.group_counts[q] = group_centralizer_count(x, q, budget);
            const DimEstimate est = group_dim_estimate(cand.group_counts);
            cand.group_dim = est.dim;
            cand.ambiguous = est.ambiguous;
            if (cand.two_blocks && 3 * m >= est.dim && (3 * m - est.dim) % 2 == 0)
                cand.ell_realized = (3 * m - est.dim) / 2;
            out.push_back(std::move(cand));
        }
    }
    return out;
}

std::vector<OrthogonalType> enumerate_orthogonal_types(
    std::size_t max_dim, const std::vector<std::pair<std::size_t, std::size_t>>& wl_realized) {
    // available labels by module dimension
    std::vector<IndecompLabel> atoms;
    for (std::size_t m = 1; 2 * m <= max_dim; ++m) {
        atoms.push_back({IndecompKind::V, m, 0});
        atoms.push_back({IndecompKind::W, m, 0});
    }
    for (const auto& [m, ell] : wl_realized) {
        if (2 * m <= max_dim) atoms.push_back({IndecompKind::Wl, m, ell});
    }
    std::sort(atoms.begin(), atoms.end(), canonical_less);
    std::vector<OrthogonalType> out;
    std::vector<IndecompLabel> current;
    // multisets: nondecreasing index sequences
    auto rec = [&](auto&& self, std::size_t first, std::size_t remaining) -> void {
        if (!current.empty()) out.push_back(OrthogonalType(current));
        for (std::size_t i = first; i < atoms.size(); ++i) {
            if (atoms[i].module_dim() > remaining) continue;
            current.push_back(atoms[i]);
            self(self, i, remaining - atoms[i].module_dim());
            current.pop_back();
        }
    };
    rec(rec, 0, max_dim);
    return out;
}

} // namespace spv

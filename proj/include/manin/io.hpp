#pragma once

// JSON interchange for every structure kind in the library.
//
// File layout: { "format_version": 1, "kind": "<tag>", ... payload ... }.
// Rationals serialize as canonical "p" / "p/q" strings, structure-constant
// tensors as sparse quadruples [i, j, k, "p/q"], polynomials as sparse
// monomial lists [[e1, ..., en], "p/q"].  Serialization uses ordered_json so
// output is byte-deterministic.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "manin/bialgebra.hpp"
#include "manin/coquad.hpp"
#include "manin/crossed_module.hpp"
#include "manin/lie.hpp"
#include "manin/matrix.hpp"
#include "manin/multivector.hpp"
#include "manin/poly.hpp"
#include "manin/polybase.hpp"
#include "manin/quadratic.hpp"
#include "manin/rational.hpp"
#include "manin/two_vect.hpp"

namespace manin {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

/// Malformed input (bad schema, bad literal, unknown kind).  Distinct from
/// mathematical failures so callers can map it to a separate exit code.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require_schema(bool ok, const std::string& msg) {
    if (!ok) throw SchemaError(msg);
}

// ---------------------------------------------------------------- scalars

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
    require_schema(j.is_string(), "rational must be a string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

inline std::size_t size_from_json(const Json& j, const std::string& what) {
    require_schema(j.is_number_unsigned(), what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

inline const Json& field(const Json& j, const std::string& key) {
    require_schema(j.is_object(), "expected an object with field '" + key + "'");
    auto it = j.find(key);
    require_schema(it != j.end(), "missing field '" + key + "'");
    return *it;
}

// ---------------------------------------------------------------- matrices

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Json& j) {
    require_schema(j.is_array(), "matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : 0;
    if (rows > 0) {
        require_schema(j[0].is_array(), "matrix row must be an array");
        cols = j[0].size();
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        require_schema(j[i].is_array() && j[i].size() == cols, "matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

// ------------------------------------------------------------- polynomials

inline Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms()) {
        Json exps = Json::array();
        for (unsigned e : key) exps.push_back(e);
        terms.push_back(Json::array({std::move(exps), rational_to_json(coeff)}));
    }
    return terms;
}

inline Poly poly_from_json(const Json& j, std::size_t nvars) {
    require_schema(j.is_array(), "polynomial must be an array of monomials");
    Poly p(nvars);
    for (const auto& t : j) {
        require_schema(t.is_array() && t.size() == 2, "monomial must be [exponents, coefficient]");
        require_schema(t[0].is_array() && t[0].size() == nvars,
                       "monomial exponent vector must have one entry per variable");
        Poly::Key key(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            key[i] = static_cast<unsigned>(size_from_json(t[0][i], "exponent"));
        p.add_term(key, rational_from_json(t[1]));
    }
    return p;
}

// ------------------------------------------------------------ Lie algebras

inline Json lie_to_json(const LieAlgebra& g) {
    Json j = Json::object();
    j["dim"] = g.dim();
    j["basis_names"] = g.basis_names();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = 0; k < g.dim(); ++k)
            for (std::size_t l = 0; l < g.dim(); ++l)
                if (g.constant(i, k, l) != 0)
                    brackets.push_back(
                        Json::array({i, k, l, rational_to_json(g.constant(i, k, l))}));
    j["brackets"] = std::move(brackets);
    return j;
}

inline LieAlgebra lie_from_json(const Json& j) {
    std::size_t n = size_from_json(field(j, "dim"), "dim");
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        const Json& bn = j["basis_names"];
        require_schema(bn.is_array() && (bn.empty() || bn.size() == n),
                       "basis_names must list one name per basis element");
        for (const auto& s : bn) {
            require_schema(s.is_string(), "basis name must be a string");
            names.push_back(s.get<std::string>());
        }
    }
    LieAlgebra g(n, std::move(names));
    const Json& brackets = field(j, "brackets");
    require_schema(brackets.is_array(), "brackets must be an array of [i, j, k, value]");
    for (const auto& e : brackets) {
        require_schema(e.is_array() && e.size() == 4, "bracket entry must be [i, j, k, value]");
        std::size_t i = size_from_json(e[0], "bracket index");
        std::size_t k = size_from_json(e[1], "bracket index");
        std::size_t l = size_from_json(e[2], "bracket index");
        require_schema(i < n && k < n && l < n, "bracket index out of range");
        g.set_constant(i, k, l, rational_from_json(e[3]));
    }
    return g;
}

// --------------------------------------------------------------- bivectors

inline Json bivector_to_json(const Multivector& lam) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : lam.terms())
        terms.push_back(Json::array({key[0], key[1], rational_to_json(coeff)}));
    return terms;
}

inline Multivector bivector_from_json(const Json& j, std::size_t dim) {
    require_schema(j.is_array(), "bivector must be an array of [i, j, value]");
    Multivector lam(dim, 2);
    for (const auto& e : j) {
        require_schema(e.is_array() && e.size() == 3, "bivector term must be [i, j, value]");
        std::size_t a = size_from_json(e[0], "bivector index");
        std::size_t b = size_from_json(e[1], "bivector index");
        require_schema(a < dim && b < dim, "bivector index out of range");
        lam.add_term({a, b}, rational_from_json(e[2]));
    }
    return lam;
}

// --------------------------------------------------- remaining structures

inline Json bialgebra_to_json(const LieBialgebra& b) {
    Json j = Json::object();
    j["g"] = lie_to_json(b.g);
    j["gstar"] = lie_to_json(b.gstar);
    return j;
}

inline LieBialgebra bialgebra_from_json(const Json& j) {
    LieBialgebra b{lie_from_json(field(j, "g")), lie_from_json(field(j, "gstar"))};
    require_schema(b.g.dim() == b.gstar.dim(), "g and gstar must have equal dimension");
    return b;
}

inline Json quadratic_to_json(const QuadraticLieAlgebra& q) {
    Json j = Json::object();
    j["algebra"] = lie_to_json(q.algebra);
    j["form"] = matrix_to_json(q.form.matrix);
    return j;
}

inline QuadraticLieAlgebra quadratic_from_json(const Json& j) {
    QuadraticLieAlgebra q{lie_from_json(field(j, "algebra")),
                          BilinearForm{matrix_from_json(field(j, "form"))}};
    require_schema(q.form.matrix.rows() == q.algebra.dim() &&
                       q.form.matrix.cols() == q.algebra.dim(),
                   "form must be a square matrix matching the algebra dimension");
    return q;
}

inline Json twovect_to_json(const TwoVect& v) {
    Json j = Json::object();
    j["side_dim"] = v.side_dim;
    j["core_dim"] = v.core_dim;
    j["del"] = matrix_to_json(v.del);
    return j;
}

inline TwoVect twovect_from_json(const Json& j) {
    std::size_t side = size_from_json(field(j, "side_dim"), "side_dim");
    std::size_t core = size_from_json(field(j, "core_dim"), "core_dim");
    Matrix del = matrix_from_json(field(j, "del"));
    require_schema(del.rows() == side && del.cols() == core,
                   "del must be side_dim x core_dim");
    return TwoVect(side, core, std::move(del));
}

inline Json representation_to_json(const Representation& r) {
    Json j = Json::object();
    j["module_dim"] = r.module_dim;
    Json act = Json::array();
    for (const auto& m : r.action) act.push_back(matrix_to_json(m));
    j["action"] = std::move(act);
    return j;
}

inline Representation representation_from_json(const Json& j) {
    Representation r;
    r.module_dim = size_from_json(field(j, "module_dim"), "module_dim");
    const Json& act = field(j, "action");
    require_schema(act.is_array(), "action must be an array of matrices");
    for (const auto& m : act) {
        Matrix mm = matrix_from_json(m);
        require_schema(mm.rows() == r.module_dim && mm.cols() == r.module_dim,
                       "action matrices must be module_dim x module_dim");
        r.action.push_back(std::move(mm));
    }
    return r;
}

inline Json crossed_module_to_json(const CrossedModule& cm) {
    Json j = Json::object();
    j["theta"] = lie_to_json(cm.theta);
    j["a"] = lie_to_json(cm.a);
    j["phi"] = matrix_to_json(cm.phi);
    j["act"] = representation_to_json(cm.act);
    return j;
}

inline CrossedModule crossed_module_from_json(const Json& j) {
    CrossedModule cm{lie_from_json(field(j, "theta")), lie_from_json(field(j, "a")),
                     matrix_from_json(field(j, "phi")), representation_from_json(field(j, "act"))};
    require_schema(cm.phi.rows() == cm.a.dim() && cm.phi.cols() == cm.theta.dim(),
                   "phi must be a.dim x theta.dim");
    require_schema(cm.act.module_dim == cm.theta.dim() && cm.act.action.size() == cm.a.dim(),
                   "action must represent a on theta");
    return cm;
}

inline Json lie2_bialgebra_to_json(const Lie2Bialgebra& b) {
    Json j = Json::object();
    j["cm1"] = crossed_module_to_json(b.cm1);
    j["cm2"] = crossed_module_to_json(b.cm2);
    return j;
}

inline Lie2Bialgebra lie2_bialgebra_from_json(const Json& j) {
    return {crossed_module_from_json(field(j, "cm1")), crossed_module_from_json(field(j, "cm2"))};
}

inline Json coquadratic_to_json(const CoquadraticLieAlgebra& cq) {
    Json j = Json::object();
    j["k"] = lie_to_json(cq.k);
    j["del"] = matrix_to_json(cq.del);
    return j;
}

inline CoquadraticLieAlgebra coquadratic_from_json(const Json& j) {
    CoquadraticLieAlgebra cq{lie_from_json(field(j, "k")), matrix_from_json(field(j, "del"))};
    require_schema(cq.del.rows() == cq.k.dim() && cq.del.cols() == cq.k.dim(),
                   "del must be a square matrix matching the algebra dimension");
    return cq;
}

inline Json quadratic_lie2_to_json(const QuadraticLie2Algebra& q) {
    Json j = Json::object();
    j["total"] = quadratic_to_json(q.total);
    j["side"] = matrix_to_json(q.side.basis());
    j["del"] = matrix_to_json(q.del);
    j["s"] = matrix_to_json(q.s);
    j["t"] = matrix_to_json(q.t);
    j["m"] = matrix_to_json(q.m);
    return j;
}

inline QuadraticLie2Algebra quadratic_lie2_from_json(const Json& j) {
    QuadraticLie2Algebra q;
    q.total = quadratic_from_json(field(j, "total"));
    std::size_t n = q.total.algebra.dim();
    Matrix side = matrix_from_json(field(j, "side"));
    require_schema(side.rows() == 0 || side.cols() == n,
                   "side basis rows must live in the total space");
    q.side = side.rows() == 0 ? Subspace(n) : Subspace::span(side);
    q.del = matrix_from_json(field(j, "del"));
    q.s = matrix_from_json(field(j, "s"));
    q.t = matrix_from_json(field(j, "t"));
    q.m = matrix_from_json(field(j, "m"));
    require_schema(q.s.rows() == n && q.s.cols() == n, "s must be total_dim x total_dim");
    require_schema(q.t.rows() == n && q.t.cols() == n, "t must be total_dim x total_dim");
    require_schema(q.m.rows() == n && q.m.cols() == 2 * n, "m must be total_dim x 2*total_dim");
    std::size_t sd = q.side.dim();
    require_schema(q.del.rows() == sd && q.del.cols() == sd,
                   "del must be square of the side dimension");
    return q;
}

inline Json poly_algebroid_to_json(const PolyLieAlgebroid& a) {
    Json j = Json::object();
    j["rank"] = a.rank;
    j["nvars"] = a.nvars;
    Json anchor = Json::array();
    for (const auto& row : a.anchor) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_to_json(p));
        anchor.push_back(std::move(r));
    }
    j["anchor"] = std::move(anchor);
    Json brackets = Json::array();
    for (std::size_t x = 0; x < a.rank; ++x)
        for (std::size_t y = 0; y < a.rank; ++y)
            for (std::size_t k = 0; k < a.rank; ++k)
                if (!a.c[x][y][k].is_zero())
                    brackets.push_back(Json::array({x, y, k, poly_to_json(a.c[x][y][k])}));
    j["brackets"] = std::move(brackets);
    return j;
}

inline PolyLieAlgebroid poly_algebroid_from_json(const Json& j) {
    PolyLieAlgebroid a;
    a.rank = size_from_json(field(j, "rank"), "rank");
    a.nvars = size_from_json(field(j, "nvars"), "nvars");
    const Json& anchor = field(j, "anchor");
    require_schema(anchor.is_array() && anchor.size() == a.rank,
                   "anchor must have one row per generator");
    for (const auto& row : anchor) {
        require_schema(row.is_array() && row.size() == a.nvars,
                       "anchor rows must have one polynomial per variable");
        PolyVec r;
        for (const auto& p : row) r.push_back(poly_from_json(p, a.nvars));
        a.anchor.push_back(std::move(r));
    }
    a.c.assign(a.rank, std::vector<PolyVec>(a.rank, poly_vec(a.rank, a.nvars)));
    const Json& brackets = field(j, "brackets");
    require_schema(brackets.is_array(), "brackets must be an array of [a, b, k, poly]");
    for (const auto& e : brackets) {
        require_schema(e.is_array() && e.size() == 4, "bracket entry must be [a, b, k, poly]");
        std::size_t x = size_from_json(e[0], "bracket index");
        std::size_t y = size_from_json(e[1], "bracket index");
        std::size_t k = size_from_json(e[2], "bracket index");
        require_schema(x < a.rank && y < a.rank && k < a.rank, "bracket index out of range");
        a.c[x][y][k] = poly_from_json(e[3], a.nvars);
    }
    return a;
}

inline Json poly_bivector_to_json(const PolyMultivector& pi) {
    require_schema(pi.degree() == 2, "expected a bivector field");
    Json j = Json::object();
    j["nvars"] = pi.nvars();
    Json terms = Json::array();
    for (const auto& [key, coeff] : pi.terms())
        terms.push_back(Json::array({key[0], key[1], poly_to_json(coeff)}));
    j["terms"] = std::move(terms);
    return j;
}

inline PolyMultivector poly_bivector_from_json(const Json& j) {
    std::size_t n = size_from_json(field(j, "nvars"), "nvars");
    PolyMultivector pi(n, 2);
    const Json& terms = field(j, "terms");
    require_schema(terms.is_array(), "terms must be an array of [i, j, poly]");
    for (const auto& e : terms) {
        require_schema(e.is_array() && e.size() == 3, "bivector term must be [i, j, poly]");
        std::size_t a = size_from_json(e[0], "bivector index");
        std::size_t b = size_from_json(e[1], "bivector index");
        require_schema(a < n && b < n, "bivector index out of range");
        pi.add_term({a, b}, poly_from_json(e[2], n));
    }
    return pi;
}

// ------------------------------------------------------------ file framing

inline const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds = {
        "lie_algebra", "bialgebra",   "quadratic",      "two_vect",      "crossed_module",
        "lie2_bialgebra", "coquadratic", "quadratic_lie2", "poly_algebroid", "poly_bivector"};
    return kinds;
}

inline Json wrap_structure(const std::string& kind, Json payload) {
    Json j = Json::object();
    j["format_version"] = kFormatVersion;
    j["kind"] = kind;
    for (auto& [key, value] : payload.items()) j[key] = std::move(value);
    return j;
}

/// Validates the framing fields and returns the kind tag.
inline std::string structure_kind(const Json& j) {
    require_schema(j.is_object(), "structure file must be a JSON object");
    require_schema(j.contains("format_version") && j["format_version"].is_number_integer() &&
                       j["format_version"].get<int>() == kFormatVersion,
                   "unsupported or missing format_version");
    const Json& k = field(j, "kind");
    require_schema(k.is_string(), "kind must be a string");
    std::string kind = k.get<std::string>();
    for (const auto& known : known_kinds())
        if (kind == known) return kind;
    throw SchemaError("unknown kind '" + kind + "'");
}

inline std::string dump_structure(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_structure_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    require_schema(!j.is_discarded(), "input is not valid JSON");
    structure_kind(j);
    return j;
}

inline Json read_structure_file(const std::string& path) {
    std::ifstream in(path);
    require_schema(in.good(), "cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_structure_text(text);
}

inline void write_structure_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out.good()) throw std::runtime_error("cannot write file: " + path);
    out << dump_structure(j);
}

/// FNV-1a over the canonical serialization; used to fingerprint inputs in
/// reports and to detect catalog drift.
inline std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline std::string structure_digest(const Json& j) { return digest(dump_structure(j)); }

}  // namespace manin

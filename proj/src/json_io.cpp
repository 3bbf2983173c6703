#include "arith/json_io.hpp"

#include <cstdint>

#include "arith/errors.hpp"

namespace arith {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw BadInput("not a decimal integer string: " + j.dump());
        }
    }
    throw BadInput("expected an integer or a decimal string, got " + j.dump());
}

Json vec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw BadInput("expected an array of integers");
    IntVec v;
    v.reserve(j.size());
    for (const Json& x : j) v.push_back(int_from_json(x));
    return v;
}

Json matrix_to_json(const IntMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.size(); ++j) row.push_back(int_to_json(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", M.size()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw BadInput("matrix JSON needs fields 'n' and 'rows'");
    const int n = j.at("n").get<int>();
    const Json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw BadInput("matrix JSON needs exactly n rows");
    IntMatrix M(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw BadInput("matrix rows must all have length n");
        for (int k = 0; k < n; ++k) M.at(i, k) = int_from_json(row.at(static_cast<std::size_t>(k)));
    }
    return M;
}

Json poly_to_json(const SqFreePoly& f, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != f.nvars())
        throw DimensionMismatch("variable name count differs from nvars");
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json mono = Json::array();
        for (int i = 0; i < f.nvars(); ++i)
            if (m & (Mask(1) << i)) mono.push_back(i);
        terms.push_back(Json{{"m", std::move(mono)}, {"c", c.get_str()}});
    }
    return Json{{"vars", vars}, {"terms", std::move(terms)}};
}

ParsedPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw BadInput("polynomial JSON needs fields 'vars' and 'terms'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    SqFreePoly f(static_cast<int>(vars.size()));
    for (const Json& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("m") || !t.contains("c"))
            throw BadInput("polynomial term needs fields 'm' and 'c'");
        Mask m = 0;
        for (const Json& idx : t.at("m")) {
            const int i = idx.get<int>();
            if (i < 0 || i >= f.nvars()) throw BadInput("monomial index outside the variable list");
            const Mask bit = Mask(1) << i;
            if (m & bit) throw NotSquareFree("repeated variable in a monomial");
            m |= bit;
        }
        f.add_term(m, int_from_json(t.at("c")));
    }
    return {std::move(f), std::move(vars)};
}

Json frontier_to_json(const Frontier& f) {
    Json a = Json::array();
    for (const IntVec& v : f.elems()) a.push_back(vec_to_json(v));
    return a;
}

Frontier frontier_from_json(const Json& j, int dim) {
    Frontier f(dim);
    if (!j.is_array()) throw BadInput("frontier JSON must be an array of arrays");
    for (const Json& v : j) f.insert_min(vec_from_json(v));
    return f;
}

Json zclass_to_json(const ZClassification& z) {
    return Json{{"is_z", z.is_z},
                {"det", z.det.get_str()},
                {"m_matrix", z.all_minors_nonneg},
                {"nonsingular_m", z.all_minors_pos},
                {"almost_nonsingular_m", z.proper_pos_det_nonneg},
                {"quasi_m", z.proper_nonneg},
                {"quasi_nonsingular_m", z.proper_pos}};
}

namespace {

const char* outcome_name(EnumOutcome o) {
    switch (o) {
        case EnumOutcome::finite: return "finite";
        case EnumOutcome::infinite: return "infinite";
        case EnumOutcome::empty: return "empty";
    }
    return "finite";
}

} // namespace

Json enum_report_to_json(const EnumReport& r) {
    Json out{{"outcome", outcome_name(r.outcome)}};
    if (r.outcome == EnumOutcome::finite) {
        out["frontier"] = frontier_to_json(r.frontier);
        Json structures = Json::array();
        for (const ArithStructure& s : r.structures)
            structures.push_back(Json{{"d", vec_to_json(s.d)},
                                      {"r", vec_to_json(s.r)},
                                      {"k", s.k_order.get_str()}});
        out["structures"] = std::move(structures);
    }
    return out;
}

Json poly_report_to_json(const PolyEnumReport& r, const std::vector<std::string>& vars) {
    Json out{{"outcome", r.infinite ? "infinite" : "finite"},
             {"frontier", frontier_to_json(r.frontier)}};
    Json structures = Json::array();
    for (const PolyStructure& s : r.structures)
        structures.push_back(Json{{"d", vec_to_json(s.d)}, {"k", s.k_order.get_str()}});
    out["structures"] = std::move(structures);
    if (r.reducible) {
        Json factors = Json::array();
        for (const FactorReport& fr : r.factors) {
            std::vector<std::string> fvars;
            for (int idx : fr.vars)
                fvars.push_back(idx < static_cast<int>(vars.size()) ? vars[static_cast<std::size_t>(idx)]
                                                                    : "x" + std::to_string(idx));
            Json fs = Json::array();
            for (const PolyStructure& s : fr.structures)
                fs.push_back(Json{{"d", vec_to_json(s.d)}, {"k", s.k_order.get_str()}});
            factors.push_back(Json{{"vars", fr.vars},
                                   {"poly", poly_to_json(fr.factor, fvars)},
                                   {"frontier", frontier_to_json(fr.frontier)},
                                   {"structures", std::move(fs)}});
        }
        Json witnesses = Json::array();
        for (const IntVec& w : r.witnesses) witnesses.push_back(vec_to_json(w));
        out["reducible"] = Json{{"infinite", r.infinite},
                                {"factors", std::move(factors)},
                                {"witnesses", std::move(witnesses)}};
    }
    return out;
}

Json solutions_to_json(const SolutionSet& s) {
    Json sols = Json::array();
    for (const IntVec& v : s.solutions) sols.push_back(vec_to_json(v));
    return Json{{"solutions", std::move(sols)}, {"complete", s.complete}, {"region", s.region}};
}

Json matrix_box_to_json(const MatrixBoxResult& r) {
    Json structures = Json::array();
    for (const ArithStructure& s : r.structures)
        structures.push_back(Json{{"d", vec_to_json(s.d)},
                                  {"r", vec_to_json(s.r)},
                                  {"k", s.k_order.get_str()}});
    return Json{{"structures", std::move(structures)}, {"complete", r.complete}, {"region", r.region}};
}

Json conjecture_to_json(const ConjectureReport& r) {
    Json entries = Json::array();
    for (const ConjectureEntry& e : r.entries) {
        Json edges = Json::array();
        for (const auto& [i, j, w] : e.graph.edges) edges.push_back(Json::array({i, j}));
        entries.push_back(Json{{"edges", std::move(edges)}, {"count", e.count}});
    }
    return Json{{"n", r.n},
                {"classes", std::move(entries)},
                {"path_count", r.path_count},
                {"complete_count", r.complete_count},
                {"path_attains_min", r.path_attains_min},
                {"complete_attains_max", r.complete_attains_max}};
}

std::string vectors_to_csv(const std::vector<IntVec>& rows, const std::vector<std::string>& header) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ",";
        out += header[i];
    }
    out += "\n";
    for (const IntVec& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i].get_str();
        }
        out += "\n";
    }
    return out;
}

} // namespace arith

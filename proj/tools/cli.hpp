#pragma once

#include "bihom/bihom.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace bihom::cli {

enum Exit : int { pass = 0, fail = 1, input_error = 2 };

/// Bad command line beyond what the argument parser itself rejects.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    bool json = false;
    std::string rep = "adjoint";
    std::string degrees = "1..2";
    std::size_t max_degree = 4;
    std::string variant = "full";
};

/// What a verb produced: a checked report and/or a constructed document.
struct Outcome {
    std::string title;
    AxiomReport report;
    std::string failure; // set for failures that carry no violations
    std::optional<Json> result;
    std::string result_name;
    std::vector<std::string> lines;
    Json extra = Json::object();

    bool passed() const { return report.passed() && failure.empty(); }
};

namespace detail {

inline Outcome titled(std::string title, AxiomReport report = {}) {
    Outcome out;
    out.title = std::move(title);
    out.report = std::move(report);
    return out;
}

using AnyAlgebra = std::variant<BiHomPreLieAlgebra, BiHomLieAlgebra>;

struct Document {
    Json json;
    std::filesystem::path base;
    std::string source;
};

inline Document load(const std::string& path) {
    std::filesystem::path p(path);
    auto base = p.parent_path();
    return {io::load_json(p), base.empty() ? std::filesystem::path(".") : base, path};
}

inline const char* kind_name(DocumentKind k) {
    switch (k) {
    case DocumentKind::prelie_algebra: return "BiHom-pre-Lie";
    case DocumentKind::lie_algebra: return "BiHom-Lie";
    case DocumentKind::prelie_rep: return "Representation";
    case DocumentKind::lie_rep: return "Lie representation";
    case DocumentKind::deformation: return "Linear deformation";
    case DocumentKind::unknown: break;
    }
    return "unknown";
}

inline void expect_kind(const Document& d, std::initializer_list<DocumentKind> kinds) {
    const auto k = document_kind(d.json);
    if (std::find(kinds.begin(), kinds.end(), k) != kinds.end())
        return;
    std::string names;
    for (auto want : kinds)
        names += (names.empty() ? "" : " or ") + std::string(kind_name(want));
    throw ParseError(d.source + ": expected a " + names + " document");
}

inline BiHomPreLieAlgebra prelie(const Document& d) {
    expect_kind(d, {DocumentKind::prelie_algebra});
    return prelie_from_json(d.json, d.source);
}

inline BiHomLieAlgebra lie(const Document& d) {
    expect_kind(d, {DocumentKind::lie_algebra});
    return lie_from_json(d.json, d.source);
}

inline AnyAlgebra any_algebra(const Json& j, const std::string& source) {
    if (document_kind(j) == DocumentKind::lie_algebra)
        return lie_from_json(j, source);
    if (document_kind(j) == DocumentKind::prelie_algebra)
        return prelie_from_json(j, source);
    throw ParseError(source + ": expected a BiHom-pre-Lie or BiHom-Lie document");
}

inline PreLieRep prelie_rep(const Document& d) {
    expect_kind(d, {DocumentKind::prelie_rep});
    return prelie_rep_from_json(d.json, d.base, d.source);
}

inline LieRep lie_rep(const Document& d) {
    expect_kind(d, {DocumentKind::lie_rep});
    return lie_rep_from_json(d.json, d.base, d.source);
}

inline std::size_t dim(const AnyAlgebra& a) {
    return std::visit([](const auto& x) { return x.dim(); }, a);
}

/// A deformation document's own "algebra" reference, or the one given separately.
inline AnyAlgebra deformation_algebra(const Document& d, const std::optional<Document>& algebra) {
    if (algebra)
        return any_algebra(algebra->json, algebra->source);
    io::Field f(d.json, "$");
    if (!f.has("algebra"))
        throw ParseError(d.source + ": $: missing field \"algebra\" and no algebra document given");
    auto [doc, base] = io::with_context<std::pair<Json, std::filesystem::path>>(
        d.source, [&] { return io::resolve(f["algebra"], d.base); });
    return any_algebra(doc, d.source + ": $.algebra");
}

inline Json with_algebra(Json doc, const AnyAlgebra& a) {
    doc["algebra"] = std::visit([](const auto& x) { return to_json(x); }, a);
    return doc;
}

inline std::pair<std::size_t, std::size_t> degree_range(const Options& o) {
    const auto& s = o.degrees;
    std::size_t lo = 0, hi = 0;
    try {
        const auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stoul(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
        } else {
            lo = std::stoul(s.substr(0, dots), &used);
            if (used != dots)
                throw std::invalid_argument(s);
            const auto tail = s.substr(dots + 2);
            hi = std::stoul(tail, &used);
            if (used != tail.size())
                throw std::invalid_argument(s);
        }
    } catch (const std::logic_error&) {
        throw UsageError("--degrees: expected a..b or a single degree, got \"" + s + "\"");
    }
    if (lo == 0 || lo > hi)
        throw UsageError("--degrees: need 1 <= a <= b, got \"" + s + "\"");
    if (hi > o.max_degree)
        throw UsageError("--degrees: degree " + std::to_string(hi) + " exceeds --max-degree " +
                         std::to_string(o.max_degree));
    return {lo, hi};
}

inline Matrix operator_matrix(const Document& d, std::size_t rows, std::size_t cols) {
    return matrix_document_from_json(d.json, "matrix", rows, cols, d.source);
}

/// Operator documents name their target through "representation" (O-operators) or "algebra"
/// (Rota-Baxter operators) unless the target is given on the command line.
inline Document operator_target(const Document& op, const char* key, const Options& o) {
    if (o.inputs.size() == 2)
        return load(o.inputs[0]);
    io::Field f(op.json, "$");
    if (!f.has(key))
        throw ParseError(op.source + ": $: missing field \"" + key + "\" and no target document given");
    const auto& ref = op.json[key];
    if (ref.is_string())
        return load((op.base / ref.get<std::string>()).string());
    return {ref, op.base, op.source + ": $." + key};
}

// --- verbs ---

inline Outcome verify(const Options& o) {
    auto d = load(o.inputs[0]);
    const auto kind = document_kind(d.json);
    auto out = titled(kind_name(kind));
    try {
        switch (kind) {
        case DocumentKind::prelie_algebra: out.report = check_prelie(prelie(d)); break;
        case DocumentKind::lie_algebra: out.report = check_bihom_lie(lie(d)); break;
        case DocumentKind::prelie_rep: {
            auto r = prelie_rep(d);
            out.report = check_prelie(r.algebra());
            out.report.merge(check_prelie_rep(r));
            break;
        }
        case DocumentKind::lie_rep: {
            auto r = lie_rep(d);
            out.report = check_bihom_lie(r.algebra());
            out.report.merge(check_lie_rep(r));
            break;
        }
        case DocumentKind::deformation: {
            auto a = deformation_algebra(d, std::nullopt);
            auto pi = deformation_from_json(d.json, dim(a), d.source);
            if (auto* p = std::get_if<BiHomPreLieAlgebra>(&a))
                out.report = check_linear_deformation(*p, pi);
            else
                out.report = check_lie_linear_deformation(std::get<BiHomLieAlgebra>(a), pi);
            break;
        }
        case DocumentKind::unknown: throw ParseError(d.source + ": unrecognised document");
        }
    } catch (const RegularityError& e) {
        out.failure = e.what();
    }
    return out;
}

inline Outcome subadjacent_verb(const Options& o) {
    auto a = prelie(load(o.inputs[0]));
    auto out = titled("BiHom-pre-Lie", check_prelie(a));
    if (out.passed()) {
        out.result = to_json(subadjacent(a));
        out.result_name = "sub-adjacent BiHom-Lie algebra";
    }
    return out;
}

inline Outcome semidirect_verb(const Options& o) {
    auto d = load(o.inputs[0]);
    expect_kind(d, {DocumentKind::prelie_rep, DocumentKind::lie_rep});
    auto out = titled(kind_name(document_kind(d.json)));
    if (document_kind(d.json) == DocumentKind::prelie_rep) {
        auto r = prelie_rep(d);
        out.report = check_prelie(r.algebra());
        out.report.merge(check_prelie_rep(r));
        if (out.passed())
            out.result = to_json(semidirect_prelie(r));
    } else {
        auto r = lie_rep(d);
        out.report = check_bihom_lie(r.algebra());
        out.report.merge(check_lie_rep(r));
        if (out.passed())
            out.result = to_json(semidirect_lie(r));
    }
    out.result_name = "semidirect product";
    return out;
}

inline Outcome induced_rep_verb(const Options& o) {
    auto r = prelie_rep(load(o.inputs[0]));
    auto out = titled("Representation", check_prelie(r.algebra()));
    out.report.merge(check_prelie_rep(r));
    if (out.passed()) {
        const auto variant = o.variant == "left" ? InducedVariant::left_only : InducedVariant::full;
        out.result = to_json(induced_lie_rep(r, variant));
        out.result_name = "induced Lie representation";
    }
    return out;
}

/// Twists document: {"alpha", "beta", "phi", "psi"}.
inline Outcome twist_rep_verb(const Options& o) {
    auto r = prelie_rep(load(o.inputs[0]));
    auto t = load(o.inputs[1]);
    const auto n = r.algebra().dim(), m = r.vdim();
    auto field = [&](const char* key, std::size_t k) {
        return matrix_document_from_json(t.json, key, k, k, t.source);
    };
    auto alpha = field("alpha", n), beta = field("beta", n), phi = field("phi", m), psi = field("psi", m);
    auto out = titled("Twisted representation");
    out.result = to_json(twist_rep(r, alpha, beta, phi, psi));
    out.result_name = "twisted representation";
    return out;
}

inline Outcome tensor_rep_verb(const Options& o) {
    auto rv = prelie_rep(load(o.inputs[0]));
    auto rw = prelie_rep(load(o.inputs[1]));
    auto out = titled("Representations", check_prelie(rv.algebra()));
    out.report.merge(check_prelie_rep(rv));
    out.report.merge(check_prelie_rep(rw));
    if (out.passed()) {
        out.result = to_json(tensor_rep(rv, rw));
        out.result_name = "tensor representation";
    }
    return out;
}

inline Outcome o_operator_verb(const Options& o) {
    auto op = load(o.inputs.back());
    auto r = lie_rep(operator_target(op, "representation", o));
    LinearOperator T(operator_matrix(op, r.algebra().dim(), r.vdim()));
    auto out = titled("O-operator", check_bihom_lie(r.algebra()));
    out.report.merge(check_lie_rep(r));
    out.report.merge(check_o_operator(T, r));
    if (out.passed()) {
        out.result = to_json(induced_prelie_from_o(T, r));
        out.result_name = "induced BiHom-pre-Lie algebra";
    }
    return out;
}

inline Outcome rota_baxter_verb(const Options& o) {
    auto op = load(o.inputs.back());
    auto g = lie(operator_target(op, "algebra", o));
    LinearOperator R(operator_matrix(op, g.dim(), g.dim()));
    auto out = titled("Rota-Baxter operator", check_bihom_lie(g));
    out.report.merge(check_rota_baxter(R, g));
    if (out.passed()) {
        out.result = to_json(rb_induced_prelie(R, g));
        out.result_name = "induced BiHom-pre-Lie algebra";
    }
    return out;
}

inline PreLieRep coefficients(const BiHomPreLieAlgebra& a, const Options& o) {
    if (o.rep == "adjoint")
        return adjoint_rep(a);
    if (o.rep == "trivial")
        return trivial_rep(a);
    return prelie_rep(load(o.rep));
}

inline Outcome cohomology_verb(const Options& o) {
    const auto [lo, hi] = degree_range(o);
    auto a = prelie(load(o.inputs[0]));
    auto r = coefficients(a, o);
    auto out = titled("BiHom-pre-Lie", check_prelie(a));
    out.report.merge(check_prelie_rep(r));
    if (!out.passed())
        return out;
    out.title.clear();
    CochainComplex complex = bihom::detail::complex_over(a, r);
    Json dims = Json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
        const auto d = complex.dims(n);
        dims.push_back({{"degree", n}, {"dimZ", d.dimZ}, {"dimB", d.dimB}, {"dimH", d.dimH}});
        out.lines.push_back("H^" + std::to_string(n) + " = " + std::to_string(d.dimH) + "  (dim Z = " +
                            std::to_string(d.dimZ) + ", dim B = " + std::to_string(d.dimB) + ")");
    }
    out.extra["cohomology"] = dims;
    return out;
}

inline Outcome deform_check_verb(const Options& o) {
    auto d = load(o.inputs.back());
    std::optional<Document> ad;
    if (o.inputs.size() == 2)
        ad = load(o.inputs[0]);
    auto a = deformation_algebra(d, ad);
    auto pi = deformation_from_json(d.json, dim(a), d.source);
    auto out = titled("Linear deformation");
    if (auto* p = std::get_if<BiHomPreLieAlgebra>(&a)) {
        out.report = check_prelie(*p);
        if (out.passed())
            out.report = check_linear_deformation(*p, pi);
    } else {
        const auto& g = std::get<BiHomLieAlgebra>(a);
        out.report = check_bihom_lie(g);
        if (out.passed())
            out.report = check_lie_linear_deformation(g, pi);
    }
    return out;
}

inline Outcome nijenhuis_verb(const Options& o) {
    auto ad = load(o.inputs[0]);
    auto nd = load(o.inputs[1]);
    auto a = any_algebra(ad.json, ad.source);
    auto N = matrix_document_from_json(nd.json, "N", dim(a), dim(a), nd.source);
    auto out = titled("Nijenhuis operator");
    if (auto* p = std::get_if<BiHomPreLieAlgebra>(&a)) {
        out.report = check_prelie(*p);
        if (!out.passed())
            return out;
        out.report = check_nijenhuis_prelie(*p, N);
        if (out.passed()) {
            out.result = with_algebra(deformation_to_json(nijenhuis_trivial_deformation(*p, N).pi), a);
            out.result_name = "trivial deformation";
        }
    } else {
        const auto& g = std::get<BiHomLieAlgebra>(a);
        out.report = check_bihom_lie(g);
        if (out.passed())
            out.report = check_nijenhuis_lie(g, N);
    }
    return out;
}

inline Outcome equivalence_verb(const Options& o) {
    auto a = prelie(load(o.inputs[0]));
    auto d1 = load(o.inputs[1]);
    auto d2 = load(o.inputs[2]);
    auto nd = load(o.inputs[3]);
    auto pi1 = deformation_from_json(d1.json, a.dim(), d1.source);
    auto pi2 = deformation_from_json(d2.json, a.dim(), d2.source);
    auto N = matrix_document_from_json(nd.json, "N", a.dim(), a.dim(), nd.source);
    auto out = titled("Equivalence", check_prelie(a));
    if (out.passed())
        out.report = check_equivalence(a, pi1, pi2, N);
    return out;
}

inline Outcome push_lie_verb(const Options& o) {
    auto d = load(o.inputs.back());
    std::optional<Document> ad;
    if (o.inputs.size() == 2)
        ad = load(o.inputs[0]);
    auto any = deformation_algebra(d, ad);
    auto* a = std::get_if<BiHomPreLieAlgebra>(&any);
    if (!a)
        throw ParseError(d.source + ": push-lie needs a deformation of a BiHom-pre-Lie algebra");
    auto pi = deformation_from_json(d.json, a->dim(), d.source);
    auto out = titled("Linear deformation", check_prelie(*a));
    if (out.passed())
        out.report = check_linear_deformation(*a, pi);
    if (out.passed()) {
        out.result = with_algebra(deformation_to_json(push_deformation_to_lie(*a, pi)), subadjacent(*a));
        out.result_name = "sub-adjacent deformation";
    }
    return out;
}

struct Verb {
    const char* name;
    const char* help;
    int min_inputs, max_inputs;
    std::function<Outcome(const Options&)> run;
};

inline const std::vector<Verb>& verbs() {
    static const std::vector<Verb> table = {
        {"verify", "Check every axiom of an algebra, representation or deformation document", 1, 1, verify},
        {"subadjacent", "Build the sub-adjacent BiHom-Lie algebra", 1, 1, subadjacent_verb},
        {"semidirect", "Build the semidirect product of a representation", 1, 1, semidirect_verb},
        {"induced-rep", "Build the induced representation of the sub-adjacent algebra", 1, 1, induced_rep_verb},
        {"twist-rep", "Twist a representation of an untwisted algebra: REP TWISTS", 2, 2, twist_rep_verb},
        {"tensor-rep", "Build the tensor product of two representations: REP REP", 2, 2, tensor_rep_verb},
        {"o-operator", "Check an O-operator and build the induced product: [LIE-REP] OPERATOR", 1, 2,
         o_operator_verb},
        {"rota-baxter", "Check a Rota-Baxter operator and build the induced product: [LIE] OPERATOR", 1, 2,
         rota_baxter_verb},
        {"cohomology", "Cohomology dimensions per degree", 1, 1, cohomology_verb},
        {"deform-check", "Check a linear deformation: [ALGEBRA] DEFORMATION", 1, 2, deform_check_verb},
        {"nijenhuis", "Check a Nijenhuis operator: ALGEBRA N", 2, 2, nijenhuis_verb},
        {"equivalence", "Check that Id + tN is an equivalence: ALGEBRA PI1 PI2 N", 4, 4, equivalence_verb},
        {"push-lie", "Push a deformation to the sub-adjacent algebra: [ALGEBRA] DEFORMATION", 1, 2, push_lie_verb},
    };
    return table;
}

struct Style {
    bool color;
    std::string status(bool ok) const {
        if (!color)
            return ok ? "PASS" : "FAIL";
        return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    }
};

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto i : v)
        s += (s.empty() ? "" : ", ") + std::to_string(i);
    return s;
}

inline std::string join(const Vector& v) {
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ", ") + x.to_string();
    return s;
}

inline constexpr std::size_t shown_violations = 20;

inline void print_text(const Outcome& r, const Options& o, std::ostream& out, const Style& style) {
    if (!r.title.empty())
        out << r.title << ": " << style.status(r.passed()) << "\n";
    if (!r.failure.empty())
        out << "  " << r.failure << "\n";
    const auto& vs = r.report.violations();
    for (std::size_t i = 0; i < std::min(vs.size(), shown_violations); ++i) {
        out << "  " << vs[i].axiom;
        if (!vs[i].indices.empty())
            out << " at (" << join(vs[i].indices) << ")";
        if (!vs[i].residual.empty())
            out << ": residual [" << join(vs[i].residual) << "]";
        out << "\n";
    }
    if (vs.size() > shown_violations)
        out << "  ... and " << vs.size() - shown_violations << " more\n";
    for (const auto& line : r.lines)
        out << line << "\n";
    if (r.result) {
        if (o.output.empty())
            out << r.result->dump(2) << "\n";
        else
            out << "wrote " << r.result_name << " to " << o.output << "\n";
    }
}

inline Json report_json(const std::string& verb, const Outcome& r, const Options& o) {
    Json j = {{"verb", verb}, {"status", r.passed() ? "pass" : "fail"}};
    if (!r.title.empty())
        j["check"] = r.title;
    j["report"] = to_json(r.report);
    if (!r.failure.empty())
        j["failure"] = r.failure;
    for (auto& [k, v] : r.extra.items())
        j[k] = v;
    if (r.result) {
        if (o.output.empty())
            j["result"] = *r.result;
        else
            j["output"] = o.output;
    }
    return j;
}

inline int report_error(const std::string& verb, const std::string& status, const std::string& message,
                        const AxiomReport* report, const Options& o, std::ostream& out, std::ostream& err,
                        const Style& style) {
    if (o.json) {
        Json j = {{"verb", verb}, {"status", status}, {"message", message}};
        if (report)
            j["report"] = to_json(*report);
        out << j.dump(2) << "\n";
    } else {
        err << "error: " << message << "\n";
        if (report) {
            auto r = titled(verb, *report);
            print_text(r, o, err, style);
        }
    }
    return status == "fail" ? Exit::fail : Exit::input_error;
}

} // namespace detail

/// Parses `args` (without the program name), runs one verb and returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false) {
    CLI::App app{"Exact checks and constructions for BiHom-pre-Lie algebras", "bihom"};
    app.require_subcommand(1);
    Options o;
    app.add_option("-o,--output", o.output, "Write the constructed document here");
    app.add_flag("--json", o.json, "Machine-readable report");
    app.add_option("--rep", o.rep, "Coefficients for cohomology: adjoint, trivial or a representation file");
    app.add_option("--degrees", o.degrees, "Degree range a..b");
    app.add_option("--max-degree", o.max_degree, "Largest degree --degrees may request");
    app.add_option("--variant", o.variant, "Induced representation: full or left")
        ->check(CLI::IsMember({"full", "left"}));

    std::map<CLI::App*, const detail::Verb*> by_command;
    for (const auto& v : detail::verbs()) {
        auto* sub = app.add_subcommand(v.name, v.help);
        sub->fallthrough();
        sub->add_option("inputs", o.inputs, "Input documents")->required()->expected(v.min_inputs, v.max_inputs);
        by_command[sub] = &v;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return Exit::pass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Exit::input_error;
    }

    const detail::Verb* verb = nullptr;
    for (auto* sub : app.get_subcommands())
        verb = by_command.at(sub);
    const detail::Style style{color && !o.json};

    try {
        auto outcome = verb->run(o);
        if (outcome.result && !o.output.empty()) {
            std::ofstream file(o.output);
            if (!file)
                throw UsageError("cannot write " + o.output);
            file << outcome.result->dump(2) << "\n";
        }
        if (o.json)
            out << detail::report_json(verb->name, outcome, o).dump(2) << "\n";
        else
            detail::print_text(outcome, o, out, style);
        return outcome.passed() ? Exit::pass : Exit::fail;
    } catch (const PreconditionError& e) {
        return detail::report_error(verb->name, "fail", e.what(), &e.report(), o, out, err, style);
    } catch (const RegularityError& e) {
        return detail::report_error(verb->name, "fail", e.what(), nullptr, o, out, err, style);
    } catch (const SingularMatrixError& e) {
        return detail::report_error(verb->name, "fail", e.what(), nullptr, o, out, err, style);
    } catch (const std::exception& e) {
        return detail::report_error(verb->name, "error", e.what(), nullptr, o, out, err, style);
    }
}

} // namespace bihom::cli

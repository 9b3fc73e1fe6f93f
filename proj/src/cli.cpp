#include "ginvlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ginvlab/random.hpp"
#include "ginvlab/rankcalc.hpp"

namespace ginvlab {

using json = nlohmann::ordered_json;

nlohmann::ordered_json matrix_to_json(const Matrix& a) {
    json data = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
        data.push_back(std::move(row));
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix: expected an object with rows, cols and data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix: rows and cols must be non-negative integers");
    const auto rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    const json& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw ParseError("matrix: data must hold " + std::to_string(rows) + " rows");
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!data[i].is_array() || data[i].size() != cols)
            throw ParseError("matrix: row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const json& cell = data[i][k];
            std::string text;
            if (cell.is_string())
                text = cell.get<std::string>();
            else if (cell.is_number_integer())
                text = std::to_string(cell.get<long long>());
            else
                throw ParseError("matrix: entry (" + std::to_string(i) + ", " + std::to_string(k) + ") is not a scalar");
            try {
                a(i, k) = GaussianRational::parse(text);
            } catch (const ParseError& e) {
                throw ParseError("matrix: entry (" + std::to_string(i) + ", " + std::to_string(k) + "): " + e.what());
            }
        }
    }
    return a;
}

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

nlohmann::ordered_json report_to_json(const CaseReport& r, bool with_witnesses) {
    json j{{"case_id", r.case_id},
           {"lhs_class", class_name(r.lhs)},
           {"rhs_class", class_name(r.rhs)},
           {"relation", relation_name(r.relation)},
           {"condition", r.condition},
           {"analytic", r.analytic},
           {"empirical", evidence_name(r.empirical)},
           {"witness_count", r.witness_count},
           {"seeds", r.seeds}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.violation()) j["violation"] = true;
    if (with_witnesses && !r.witnesses.empty()) {
        json w = json::array();
        for (const auto& x : r.witnesses)
            w.push_back(json{{"seed", x.seed}, {"role", x.role}, {"matrix", matrix_to_json(x.g)}});
        j["witnesses"] = std::move(w);
    }
    return j;
}

namespace {

struct Config {
    std::string in, a, b, c, d, g, out;
    std::string cls = "1", rhs_cls, relation = "eq", case_id, format = "json";
    std::string alpha = "1", beta = "2";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t budget = 64;
    std::size_t count = 20, max_m = 4, max_n = 3;
    bool serial = false, sampling_only = false, complex = false;
};

struct Outcome {
    json body;
    std::string text;
    int code = 0;
};

json classes_json(ClassSet s) {
    json a = json::array();
    for (auto cls : kAllClasses)
        if (s & bit(cls)) a.push_back(class_name(cls));
    return a;
}

std::string report_line(const CaseReport& r) {
    std::ostringstream os;
    os << r.case_id << " M^(" << class_name(r.lhs) << ") " << relation_name(r.relation) << " C^-1 B^("
       << class_name(r.rhs) << ") A^-1  [" << r.condition << "]  analytic=" << (r.analytic ? "true" : "false")
       << " empirical=" << evidence_name(r.empirical) << " evidence=" << r.witness_count;
    if (r.violation()) os << "  VIOLATION";
    return os.str();
}

SurveyOptions survey_options(const Config& cfg) {
    SurveyOptions opt;
    opt.budget = cfg.budget;
    opt.seed = cfg.seed;
    opt.policy = cfg.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
    opt.exact_intersect = !cfg.sampling_only;
    return opt;
}

json violation_json(const CaseReport& r, const TripleInstance& inst) {
    return json{{"report", report_to_json(r)},
                {"a", matrix_to_json(inst.a())},
                {"b", matrix_to_json(inst.b())},
                {"c", matrix_to_json(inst.c())}};
}

Outcome cmd_pinv(const Config& cfg) {
    Matrix a = load_matrix(cfg.in);
    Matrix p = pinv(a);
    return {matrix_to_json(p), p.to_string() + "\n", 0};
}

Outcome cmd_ginv(const Config& cfg) {
    Matrix a = load_matrix(cfg.in);
    GInvClass cls = parse_class(cfg.cls);
    Matrix g = sample_ginverse(a, cls, cfg.seed);
    Outcome o;
    o.body = json{{"class", class_name(cls)}, {"seed", cfg.seed}, {"matrix", matrix_to_json(g)}};
    o.text = g.to_string() + "\n";
    return o;
}

Outcome cmd_member(const Config& cfg) {
    Matrix a = load_matrix(cfg.in);
    Matrix g = load_matrix(cfg.g);
    MemberTest t(a);
    ClassSet s = t.classes(g);
    Outcome o;
    o.body = json{{"classes", classes_json(s)}};
    std::ostringstream os;
    for (auto cls : kAllClasses) os << class_name(cls) << ": " << ((s & bit(cls)) ? "yes" : "no") << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_rankfmla(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    json j;
    std::ostringstream os;
    j["rank_product"] = rank_product(a, b, derive_seed(cfg.seed, {1}), derive_seed(cfg.seed, {2}));
    os << "r(AB) = " << j["rank_product"].get<std::size_t>() << "\n";
    if (!cfg.c.empty()) {
        Matrix c = load_matrix(cfg.c);
        if (cfg.d.empty()) {
            j["rank_triple_product"] =
                rank_triple_product(a, b, c, derive_seed(cfg.seed, {3}), derive_seed(cfg.seed, {4}));
            os << "r(ABC) = " << j["rank_triple_product"].get<std::size_t>() << "\n";
            auto e = extremal_rank_sandwich(a, b, c);
            j["sandwich"] = json{{"max", e.max_value}, {"min", e.min_value}};
            os << "r(A^(1,2) B C^(1,2)) in [" << e.min_value << ", " << e.max_value << "]\n";
        } else {
            Matrix d = load_matrix(cfg.d);
            auto e = extremal_rank_schur(a, b, c, d);
            j["schur"] = json{{"max", e.max_value}, {"min", e.min_value}};
            os << "r(D - C A^(1,2) B) in [" << e.min_value << ", " << e.max_value << "]\n";
            auto v = solvability_g1(a, b, c, d);
            json forall{{"1", v.holds_for_all}};
            for (auto cls : kAllClasses)
                if (cls != GInvClass::G1) forall[std::string(class_name(cls))] = forall_identity(cls, a, b, c, d);
            j["c_g_b_equals_d"] = json{{"exists_1", v.exists_some}, {"for_all", forall}};
            os << "C A^(1) B = D: some " << v.exists_some << ", all " << v.holds_for_all << "\n";
        }
    }
    return {j, os.str(), 0};
}

Outcome cmd_rol_two(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    GInvClass cls = parse_class(cfg.cls);
    Matrix ab = a * b;
    json list = json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& c : mixed_rol_candidates_two(a, b, cls, cfg.seed)) {
        bool ok = is_member(c.value, ab, cls);
        all &= ok;
        list.push_back(json{{"name", c.name}, {"member", ok}, {"matrix", matrix_to_json(c.value)}});
        os << c.name << ": " << (ok ? "member" : "NOT a member") << "\n";
    }
    auto h = huang_construction_two(a, b, cls, cfg.seed);
    json j{{"class", class_name(cls)}, {"templates", list},
           {"corrected", json{{"member", h.member}, {"matrix", matrix_to_json(h.g)}}}};
    os << "corrected construction: " << (h.member ? "member" : "not a member") << "\n";
    if (cls == GInvClass::G12) {
        j["rank_condition"] = huang_condition_two_12(a, b);
        os << "r(AB) = r(A) = r(B): " << j["rank_condition"].get<bool>() << "\n";
    }
    // templates and the {1} construction are unconditional
    int code = all && (cls != GInvClass::G1 || h.member) ? 0 : 2;
    return {j, os.str(), code};
}

Outcome cmd_rol_three(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    Matrix c = load_matrix(cfg.c);
    GInvClass cls = parse_class(cfg.cls);
    Matrix m = a * b * c;
    json list = json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& t : mixed_rol_candidates_three(a, b, c, cls, cfg.seed)) {
        bool ok = is_member(t.value, m, cls);
        all &= ok;
        list.push_back(json{{"name", t.name}, {"member", ok}, {"matrix", matrix_to_json(t.value)}});
        os << t.name << ": " << (ok ? "member" : "NOT a member") << "\n";
    }
    auto h = huang_construction_three(a, b, c, cls, cfg.seed);
    json j{{"class", class_name(cls)}, {"templates", list},
           {"corrected", json{{"member", h.member}, {"matrix", matrix_to_json(h.g)}}}};
    os << "corrected construction: " << (h.member ? "member" : "not a member") << "\n";
    if (cls == GInvClass::G12) {
        j["rank_condition"] = huang_condition_three_12(a, b, c);
        os << "r(M) = r(AB) = r(BC): " << j["rank_condition"].get<bool>() << "\n";
    }
    int code = all && (cls != GInvClass::G1 || h.member) ? 0 : 2;
    return {j, os.str(), code};
}

Outcome cmd_survey(const Config& cfg) {
    TripleInstance inst(load_matrix(cfg.a), load_matrix(cfg.b), load_matrix(cfg.c));
    SurveyOptions opt = survey_options(cfg);
    std::vector<CaseReport> reports;
    if (!cfg.case_id.empty()) {
        const CaseEntry& e = find_case(cfg.case_id, parse_relation(cfg.relation));
        SamplePool pool(inst, opt);
        reports.push_back(evaluate_case(pool, e));
    } else {
        reports = survey_reports(inst, opt);
    }
    json list = json::array(), violations = json::array();
    std::ostringstream os;
    for (const auto& r : reports) {
        list.push_back(report_to_json(r));
        os << report_line(r) << "\n";
        if (r.violation()) violations.push_back(violation_json(r, inst));
    }
    json j{{"m", inst.rows()},
           {"n", inst.cols()},
           {"rank_b", inst.rank_b()},
           {"left_condition", inst.left_condition()},
           {"right_condition", inst.right_condition()},
           {"budget", opt.budget},
           {"seed", opt.seed},
           {"cells", list}};
    j["violations"] = violations;
    os << violations.size() << " violation(s)\n";
    return {j, os.str(), violations.empty() ? 0 : 2};
}

Outcome cmd_covariance(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    GInvClass lhs = parse_class(cfg.cls);
    GInvClass rhs = parse_class(cfg.rhs_cls.empty() ? cfg.cls : cfg.rhs_cls);
    CaseReport r = covariance_case(a, b, lhs, rhs, parse_relation(cfg.relation), survey_options(cfg));
    return {report_to_json(r), report_line(r) + "\n", r.violation() ? 2 : 0};
}

Outcome cmd_sum_pinv(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    Matrix s = sum_pinv_via_block(a, b);
    json classes = json::array();
    std::ostringstream os;
    os << s.to_string() << "\n";
    int code = 0;
    for (const auto& r : sum_block_classes(a, b, survey_options(cfg))) {
        classes.push_back(report_to_json(r));
        os << r.case_id << ": " << evidence_name(r.empirical) << "\n";
        if (r.violation()) code = 2;
    }
    return {json{{"pinv", matrix_to_json(s)}, {"classes", classes}}, os.str(), code};
}

Outcome cmd_idempotent(const Config& cfg) {
    Matrix a = load_matrix(cfg.a);
    Matrix b = load_matrix(cfg.b);
    auto rep = idempotent_rol(a, b, GaussianRational::parse(cfg.alpha), GaussianRational::parse(cfg.beta),
                              survey_options(cfg));
    json j{{"lambda", rep.lambda.to_string()},
           {"factorization", rep.factorization},
           {"factorization_swapped", rep.factorization_swapped},
           {"factorization_with_one_minus", rep.factorization_minus},
           {"g1_equality", report_to_json(rep.g1_equality)},
           {"dagger_rol", rep.dagger_rol},
           {"stated_ranges", rep.stated_ranges},
           {"derived_ranges", rep.derived_ranges}};
    std::ostringstream os;
    os << "lambda = " << rep.lambda << "\nfactorization: " << rep.factorization
       << "\nswapped factorization: " << rep.factorization_swapped
       << "\nwith (1 - alpha)(1 - beta): " << rep.factorization_minus << "\n"
       << report_line(rep.g1_equality) << "\ndagger law: " << rep.dagger_rol
       << "\nstated range pair: " << rep.stated_ranges << "\nderived range pair: " << rep.derived_ranges << "\n";
    int code = !rep.factorization || rep.g1_equality.violation() ? 2 : 0;
    return {j, os.str(), code};
}

// Rank strata of the sweep; the shape and rank follow from the stratum.
enum Stratum { kZero, kRankMLessN, kRankNLessM, kRankSquare, kDeficient };
constexpr const char* kStratumNames[] = {"B=0", "r(B)=m<n", "r(B)=n<m", "r(B)=m=n", "0<r(B)<min"};

struct Shape {
    std::size_t m, n, r;
};

Shape draw_shape(Rng& rng, Stratum s, std::size_t max_m, std::size_t max_n) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return static_cast<std::size_t>(rng.uniform(long(lo), long(hi))); };
    switch (s) {
        case kZero: {
            std::size_t m = pick(1, max_m), n = pick(1, max_n);
            return {m, n, 0};
        }
        case kRankMLessN: {
            if (max_n < 2) break;
            std::size_t n = pick(2, max_n), m = pick(1, std::min(n - 1, max_m));
            return {m, n, m};
        }
        case kRankNLessM: {
            if (max_m < 2) break;
            std::size_t m = pick(2, max_m), n = pick(1, std::min(m - 1, max_n));
            return {m, n, n};
        }
        case kRankSquare: {
            std::size_t k = pick(1, std::min(max_m, max_n));
            return {k, k, k};
        }
        case kDeficient: {
            if (max_m < 2 || max_n < 2) break;
            std::size_t m = pick(2, max_m), n = pick(2, max_n);
            return {m, n, pick(1, std::min(m, n) - 1)};
        }
    }
    return {1, 1, 1};
}

Outcome cmd_sweep(const Config& cfg) {
    if (cfg.max_m < 1 || cfg.max_n < 1) throw DimensionMismatch("sweep: sizes must be at least 1");
    SurveyOptions opt = survey_options(cfg);
    auto catalog = case_catalog();
    struct Stats {
        std::size_t analytic_true = 0, analytic_false = 0, unfalsified = 0, violations = 0;
        std::size_t by_evidence[4] = {0, 0, 0, 0};
    };
    std::vector<Stats> stats(catalog.size());
    std::size_t per_stratum[5] = {0, 0, 0, 0, 0};
    json violations = json::array();
    std::size_t total_violations = 0;

    for (std::size_t i = 0; i < cfg.count; ++i) {
        Rng rng(derive_seed(cfg.seed, {0x5eed, i}));
        auto stratum = static_cast<Stratum>(i % 5);
        Shape sh = draw_shape(rng, stratum, cfg.max_m, cfg.max_n);
        ++per_stratum[stratum];
        bool complex = cfg.complex && i % 3 == 2;
        TripleInstance inst = random_instance(rng.next(), sh.m, sh.n, sh.r, complex);
        SurveyOptions local = opt;
        local.seed = derive_seed(cfg.seed, {i});
        auto reports = survey_reports(inst, local);
        for (std::size_t k = 0; k < reports.size(); ++k) {
            const auto& r = reports[k];
            Stats& st = stats[k];
            (r.analytic ? st.analytic_true : st.analytic_false)++;
            st.by_evidence[static_cast<int>(r.empirical)]++;
            if (!r.analytic && r.empirical == Evidence::ConsistentTrue) ++st.unfalsified;
            if (r.violation()) {
                ++st.violations;
                ++total_violations;
                if (violations.size() < 20) {
                    json v = violation_json(r, inst);
                    v["instance"] = i;
                    v["stratum"] = kStratumNames[stratum];
                    violations.push_back(std::move(v));
                }
            }
        }
    }

    json cells = json::array();
    std::ostringstream os;
    os << "instances " << cfg.count << ", budget " << opt.budget << ", seed " << cfg.seed << "\n";
    for (int s = 0; s < 5; ++s) os << "  " << kStratumNames[s] << ": " << per_stratum[s] << "\n";
    std::size_t unfalsified = 0, inconclusive = 0;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        const auto& e = catalog[k];
        const Stats& st = stats[k];
        unfalsified += st.unfalsified;
        inconclusive += st.by_evidence[static_cast<int>(Evidence::Inconclusive)];
        cells.push_back(json{{"case_id", e.id},
                             {"relation", relation_name(e.relation)},
                             {"analytic_true", st.analytic_true},
                             {"analytic_false", st.analytic_false},
                             {"confirmed_true", st.by_evidence[0]},
                             {"confirmed_false", st.by_evidence[1]},
                             {"consistent_true", st.by_evidence[2]},
                             {"inconclusive", st.by_evidence[3]},
                             {"unfalsified", st.unfalsified},
                             {"violations", st.violations}});
        if (st.violations > 0 || st.unfalsified > 0)
            os << "  " << e.id << " " << relation_name(e.relation) << ": violations " << st.violations
               << ", analytic false but unfalsified " << st.unfalsified << "\n";
    }
    os << "cells evaluated " << cfg.count * catalog.size() << ", violations " << total_violations
       << ", unfalsified " << unfalsified << ", inconclusive " << inconclusive << "\n";
    json strata = json::object();
    for (int s = 0; s < 5; ++s) strata[kStratumNames[s]] = per_stratum[s];
    json j{{"instances", cfg.count}, {"budget", opt.budget},  {"seed", cfg.seed},
           {"strata", strata},       {"cells", cells},        {"total_violations", total_violations},
           {"unfalsified", unfalsified}, {"inconclusive", inconclusive}, {"violations", violations}};
    return {j, os.str(), total_violations == 0 ? 0 : 2};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generalized inverses and reverse-order laws"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed (falls back to GINVLAB_SEED)")
            ->each([&](const std::string&) { cfg.seed_given = true; });
        sub->add_option("--budget", cfg.budget, "samples per side and class")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "write the result here instead of stdout");
        sub->add_flag("--serial", cfg.serial, "sample without OpenMP");
    };
    auto classes = CLI::IsMember({"1", "12", "13", "14", "123", "124", "134", "mp"});
    auto relations = CLI::IsMember({"cap", "supseteq", "subseteq", "eq", "dagger"});

    auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse");
    pinv_cmd->add_option("--in", cfg.in)->required();
    auto* ginv_cmd = app.add_subcommand("ginv", "a sampled member of one class");
    ginv_cmd->add_option("--in", cfg.in)->required();
    ginv_cmd->add_option("--class", cfg.cls)->check(classes);
    auto* member_cmd = app.add_subcommand("member", "classes of A containing G");
    member_cmd->add_option("--in", cfg.in)->required();
    member_cmd->add_option("--g", cfg.g)->required();
    auto* rank_cmd = app.add_subcommand("rankfmla", "rank formulas for AB, ABC or D - C A^(1,2) B");
    rank_cmd->add_option("--a", cfg.a)->required();
    rank_cmd->add_option("--b", cfg.b)->required();
    rank_cmd->add_option("--c", cfg.c);
    rank_cmd->add_option("--d", cfg.d);
    auto* two_cmd = app.add_subcommand("rol-two", "inverse constructions for AB");
    two_cmd->add_option("--a", cfg.a)->required();
    two_cmd->add_option("--b", cfg.b)->required();
    two_cmd->add_option("--class", cfg.cls)->check(CLI::IsMember({"1", "12"}));
    auto* three_cmd = app.add_subcommand("rol-three", "inverse constructions for ABC");
    three_cmd->add_option("--a", cfg.a)->required();
    three_cmd->add_option("--b", cfg.b)->required();
    three_cmd->add_option("--c", cfg.c)->required();
    three_cmd->add_option("--class", cfg.cls)->check(CLI::IsMember({"1", "12"}));
    auto* survey_cmd = app.add_subcommand("survey", "all table cells for A, B, C with A and C nonsingular");
    survey_cmd->add_option("--a", cfg.a)->required();
    survey_cmd->add_option("--b", cfg.b)->required();
    survey_cmd->add_option("--c", cfg.c)->required();
    survey_cmd->add_option("--case", cfg.case_id, "a single cell, e.g. 11c");
    survey_cmd->add_option("--relation", cfg.relation)->check(relations);
    survey_cmd->add_flag("--sampling-only", cfg.sampling_only, "leave empty intersections Inconclusive");
    auto* cov_cmd = app.add_subcommand("covariance", "one cell for M = A B A^-1");
    cov_cmd->add_option("--a", cfg.a)->required();
    cov_cmd->add_option("--b", cfg.b)->required();
    cov_cmd->add_option("--class", cfg.cls)->check(classes);
    cov_cmd->add_option("--rhs-class", cfg.rhs_cls)->check(classes);
    cov_cmd->add_option("--relation", cfg.relation)->check(relations);
    auto* sum_cmd = app.add_subcommand("sum-pinv", "(A + B)^dagger through [[A, B], [B, A]]");
    sum_cmd->add_option("--a", cfg.a)->required();
    sum_cmd->add_option("--b", cfg.b)->required();
    auto* idem_cmd = app.add_subcommand("idempotent", "I + alpha A + beta B for idempotent A, B");
    idem_cmd->add_option("--a", cfg.a)->required();
    idem_cmd->add_option("--b", cfg.b)->required();
    idem_cmd->add_option("--alpha", cfg.alpha);
    idem_cmd->add_option("--beta", cfg.beta);
    auto* sweep_cmd = app.add_subcommand("sweep", "survey random instances across rank strata");
    sweep_cmd->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-m", cfg.max_m);
    sweep_cmd->add_option("--max-n", cfg.max_n);
    sweep_cmd->add_flag("--complex", cfg.complex, "every third instance complex");
    sweep_cmd->add_flag("--sampling-only", cfg.sampling_only, "leave empty intersections Inconclusive");
    for (auto* sub : {pinv_cmd, ginv_cmd, member_cmd, rank_cmd, two_cmd, three_cmd, survey_cmd, cov_cmd, sum_cmd,
                      idem_cmd, sweep_cmd})
        common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    if (!cfg.seed_given) {
        if (const char* env = std::getenv("GINVLAB_SEED")) {
            try {
                cfg.seed = std::stoull(env);
            } catch (const std::exception&) {
                err << "error: GINVLAB_SEED is not an unsigned integer\n";
                return 1;
            }
        }
    }

    Outcome o;
    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "pinv") o = cmd_pinv(cfg);
        else if (name == "ginv") o = cmd_ginv(cfg);
        else if (name == "member") o = cmd_member(cfg);
        else if (name == "rankfmla") o = cmd_rankfmla(cfg);
        else if (name == "rol-two") o = cmd_rol_two(cfg);
        else if (name == "rol-three") o = cmd_rol_three(cfg);
        else if (name == "survey") o = cmd_survey(cfg);
        else if (name == "covariance") o = cmd_covariance(cfg);
        else if (name == "sum-pinv") o = cmd_sum_pinv(cfg);
        else if (name == "idempotent") o = cmd_idempotent(cfg);
        else o = cmd_sweep(cfg);
    } catch (const TheoremViolation& v) {
        err << "violation: " << v.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string payload = cfg.format == "json" ? o.body.dump(2) + "\n" : o.text;
    if (cfg.out.empty()) {
        out << payload;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return 1;
        }
        f << payload;
    }
    if (o.code == 2) err << "violation: a table verdict was contradicted; see the report\n";
    return o.code;
}

}  // namespace ginvlab

// Command-line front end: decide recurrences, classify integrals, run the
// numeric probes, guess annihilating polynomials, and batch over a corpus.
//
// Exit codes: 0 decided, 2 unsupported class, 3 parse/input error,
// 4 decider/probe disagreement.

#include "precur/document.hpp"
#include "precur/hypergeom.hpp"
#include "precur/integral.hpp"
#include "precur/order2.hpp"
#include "precur/probes.hpp"
#include "precur/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace precur;

constexpr int kExitDecided = 0;
constexpr int kExitUnsupported = 2;
constexpr int kExitParse = 3;
constexpr int kExitDisagreement = 4;

struct ProbeOptions {
    size_t depth = 200;
    long prime_bound = 50;
    long guess_deg_x = 4;
    long guess_deg_y = 4;
};

bool probe_no_large_prime(const std::vector<Rational>& terms, long bound) {
    return !almost_integrality_probe(terms, Int(bound)).first_bad_index.has_value();
}

std::vector<Rational> order2_terms(const Order2Rec& rec, const InitialPair& init, size_t depth) {
    return generate_terms(rec, init, depth);
}

bool collinear(const InitialPair& a, const InitialPair& b) {
    return a.s0 * b.s1 - a.s1 * b.s0 == 0;
}

/// Oracle cross-checks for an order-2 verdict. Appends findings to the
/// report and returns false on any decider/probe disagreement.
bool cross_check_order2(const RecurrenceDocument& doc, const Order2Rec& rec, const CaseVerdict& v,
                        const ProbeOptions& opt, Json& report) {
    Json probes = Json::array();
    bool ok = true;
    const long dx = doc.guess_deg_x.value_or(opt.guess_deg_x);
    const long dy = doc.guess_deg_y.value_or(opt.guess_deg_y);

    auto check_direction = [&](const InitialPair& dir, bool expect_bounded, const char* role) {
        auto terms = order2_terms(rec, dir, opt.depth);
        bool bounded = probe_no_large_prime(terms, opt.prime_bound);
        bool agree = bounded == expect_bounded;
        probes.push_back(Json{{"probe", "denominators"},
                              {"direction", detail::json_pair(dir)},
                              {"role", role},
                              {"no_large_prime", bounded},
                              {"agrees", agree}});
        ok = ok && agree;
    };
    auto check_guess = [&](const InitialPair& dir, bool expect_found, const char* role) {
        auto terms = order2_terms(rec, dir, opt.depth);
        auto guess = guess_annihilator(TruncatedSeries(std::move(terms)), dx, dy);
        bool agree = guess.has_value() == expect_found;
        probes.push_back(Json{{"probe", "annihilator"},
                              {"direction", detail::json_pair(dir)},
                              {"role", role},
                              {"deg_x", dx},
                              {"deg_y", dy},
                              {"found", guess.has_value()},
                              {"agrees", agree}});
        ok = ok && agree;
    };

    const InitialPair e0{Rational(1), Rational(0)}, e1{Rational(0), Rational(1)};
    switch (v.kind) {
    case CaseVerdict::Kind::AllAlgebraic:
        check_direction(e0, true, "basis");
        check_direction(e1, true, "basis");
        check_guess(doc.init0 ? InitialPair{*doc.init0, doc.init1.value_or(1)} : InitialPair{Rational(1), Rational(1)},
                    true, "solution");
        break;
    case CaseVerdict::Kind::AllTranscendental:
        check_direction(e0, false, "basis");
        check_direction(e1, false, "basis");
        check_guess(e0, false, "basis");
        break;
    case CaseVerdict::Kind::Line: {
        check_direction(*v.pair, true, "line");
        // One off-line witness with a large denominator prime suffices.
        bool witness = false;
        for (const InitialPair& dir : {e1, e0}) {
            if (collinear(*v.pair, dir)) continue;
            auto terms = order2_terms(rec, dir, opt.depth);
            bool bounded = probe_no_large_prime(terms, opt.prime_bound);
            probes.push_back(Json{{"probe", "denominators"},
                                  {"direction", detail::json_pair(dir)},
                                  {"role", "off-line"},
                                  {"no_large_prime", bounded}});
            witness = witness || !bounded;
        }
        probes.back()["agrees"] = witness;
        ok = ok && witness;
        check_guess(*v.pair, true, "line");
        break;
    }
    case CaseVerdict::Kind::Unsupported:
        break;
    }
    report["probes"] = probes;
    report["probes_agree"] = ok;
    return ok;
}

bool cross_check_order1(const RecurrenceDocument& doc, const Order1Rec& rec, bool bounded,
                        const ProbeOptions& opt, Json& report) {
    auto terms = generate_terms(rec, doc.init0.value_or(Rational(1)), opt.depth);
    bool no_large = probe_no_large_prime(terms, opt.prime_bound);
    bool ok = no_large == bounded;
    report["probes"] = Json::array({Json{{"probe", "denominators"},
                                         {"no_large_prime", no_large},
                                         {"agrees", ok}}});
    if (bounded) {
        const long dx = doc.guess_deg_x.value_or(opt.guess_deg_x);
        const long dy = doc.guess_deg_y.value_or(opt.guess_deg_y);
        auto guess = guess_annihilator(TruncatedSeries(std::move(terms)), dx, dy);
        report["probes"].push_back(Json{{"probe", "annihilator"},
                                        {"deg_x", dx},
                                        {"deg_y", dy},
                                        {"found", guess.has_value()},
                                        {"agrees", guess.has_value()}});
        ok = ok && guess.has_value();
    }
    report["probes_agree"] = ok;
    return ok;
}

struct DecideOutcome {
    Json report;
    int exit_code = kExitDecided;
    std::string verdict_text;
};

DecideOutcome run_decide(const RecurrenceDocument& doc, bool with_probes, const ProbeOptions& opt) {
    DecideOutcome out;
    if (doc.order == 1) {
        Order1Rec rec = doc.to_order1();
        bool bounded = hypergeom_globally_bounded(rec);
        out.report = verdict_report(doc, rec, bounded);
        out.verdict_text = bounded ? "globally-bounded" : "not-globally-bounded";
        if (with_probes && !cross_check_order1(doc, rec, bounded, opt, out.report))
            out.exit_code = kExitDisagreement;
        return out;
    }
    Order2Rec rec = doc.to_order2();
    CaseVerdict v = decide_case(rec);
    out.report = verdict_report(doc, v);
    out.verdict_text = out.report["verdict"].get<std::string>();
    if (v.kind == CaseVerdict::Kind::Line)
        out.verdict_text += " " + out.report["pair"].dump();
    if (v.kind == CaseVerdict::Kind::Unsupported) {
        out.exit_code = kExitUnsupported;
        return out;
    }
    if (with_probes && !cross_check_order2(doc, rec, v, opt, out.report))
        out.exit_code = kExitDisagreement;
    return out;
}

void print_report(const Json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << report["input"]["label"].get<std::string>() << ": "
              << report["verdict"].get<std::string>();
    if (report.contains("pair")) std::cout << " line " << report["pair"].dump();
    if (report.contains("branch")) std::cout << " [" << report["branch"].get<std::string>() << "]";
    std::cout << "\n";
    if (report.contains("probes_agree") && !report["probes_agree"].get<bool>())
        std::cout << "  probe disagreement!\n";
}

int cmd_integral(long n, const std::string& a1s, const std::string& a2s, const std::string& qs,
                 bool as_json) {
    IntegralSpec spec{n, parse_rational(a1s), parse_rational(a2s), parse_rational(qs)};
    IntegralAnalysis a = analyze_integral(spec);
    Json j = detail::json_integral(a);
    j["schema_version"] = report_schema_version;
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "integral x^" << n << " (1 + " << a1s << " x + " << a2s << " x^2)^(" << qs
                  << ") dx: " << j["verdict"].get<std::string>() << " [" << j["kind"].get<std::string>()
                  << "]\n";
        if (a.certificate)
            std::cout << "  c = " << to_string(a.certificate->c)
                      << ", c~ = " << to_string(a.certificate->c_tilde) << "\n";
        if (a.logs && a.logs->roots.kind != QuadRoots::Kind::ConjugatePair)
            std::cout << "  A1 = " << to_string(a.logs->A1) << ", B1 = " << to_string(a.logs->B1)
                      << "\n";
    }
    return kExitDecided;
}

std::vector<Rational> document_terms(const RecurrenceDocument& doc, const ProbeOptions& opt) {
    if (doc.order == 1)
        return generate_terms(doc.to_order1(), doc.init0.value_or(Rational(1)), opt.depth);
    InitialPair init{doc.init0.value_or(Rational(1)), doc.init1.value_or(Rational(1))};
    return generate_terms(doc.to_order2(), init, opt.depth);
}

int cmd_probe(const std::string& path, const ProbeOptions& opt, bool as_json) {
    RecurrenceDocument doc = load_document(path);
    auto rep = almost_integrality_probe(document_terms(doc, opt), Int(opt.prime_bound));
    Json j{{"schema_version", report_schema_version},
           {"input", detail::json_document(doc)},
           {"denominators", detail::json_denominator_report(rep)}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << doc.label << ": depth " << rep.depth << ", max denominator prime "
                  << rep.max_prime_seen.str();
        if (rep.first_bad_index)
            std::cout << ", first prime > " << opt.prime_bound << " at index " << *rep.first_bad_index;
        std::cout << "\n";
    }
    return kExitDecided;
}

int cmd_guess(const std::string& path, const ProbeOptions& opt, bool as_json) {
    RecurrenceDocument doc = load_document(path);
    const long dx = doc.guess_deg_x.value_or(opt.guess_deg_x);
    const long dy = doc.guess_deg_y.value_or(opt.guess_deg_y);
    auto guess = guess_annihilator(TruncatedSeries(document_terms(doc, opt)), dx, dy);
    Json j{{"schema_version", report_schema_version},
           {"input", detail::json_document(doc)},
           {"deg_x", dx},
           {"deg_y", dy},
           {"found", guess.has_value()}};
    if (guess) {
        Json grid = Json::array();
        for (const auto& row : guess->coeff) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.str());
            grid.push_back(r);
        }
        j["coefficients"] = grid;
        j["verified_order"] = guess->verified_order;
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitDecided;
    }
    if (!guess) {
        std::cout << doc.label << ": no annihilator at degrees (" << dx << ", " << dy << ")\n";
        return kExitDecided;
    }
    std::cout << doc.label << ": P(x, y) =";
    bool first = true;
    for (size_t i = 0; i < guess->coeff.size(); ++i)
        for (size_t jj = 0; jj < guess->coeff[i].size(); ++jj) {
            const Int& c = guess->coeff[i][jj];
            if (c == 0) continue;
            std::cout << (first ? " " : " + ") << c.str();
            if (i > 0) std::cout << "*x^" << i;
            if (jj > 0) std::cout << "*y^" << jj;
            first = false;
        }
    std::cout << "  (verified to order " << guess->verified_order << ")\n";
    return kExitDecided;
}

int cmd_corpus(const std::string& dir, const ProbeOptions& opt, unsigned jobs, bool with_probes,
               std::string out_dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".rec" || ext == ".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (out_dir.empty()) out_dir = (fs::path(dir) / "reports").string();
    fs::create_directories(out_dir);

    struct Entry {
        std::string label, verdict;
        int exit_code;
        std::string error;
    };
    std::vector<Entry> results(files.size());
    std::mutex io_mutex;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < files.size();) {
            Entry e{files[i].stem().string(), "", kExitDecided, ""};
            try {
                RecurrenceDocument doc = load_document(files[i].string());
                e.label = doc.label;
                DecideOutcome out = run_decide(doc, with_probes, opt);
                e.verdict = out.verdict_text;
                e.exit_code = out.exit_code;
                std::ofstream f(fs::path(out_dir) / (doc.label + ".report.json"));
                f << out.report.dump(2) << "\n";
            } catch (const std::exception& ex) {
                e.exit_code = kExitParse;
                e.error = ex.what();
            }
            std::lock_guard<std::mutex> lock(io_mutex);
            results[i] = std::move(e);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(results.begin(), results.end(),
              [](const Entry& a, const Entry& b) { return a.label < b.label; });
    int exit_code = kExitDecided;
    size_t errors = 0;
    for (const auto& e : results) {
        std::cout << e.label << ": ";
        if (!e.error.empty()) {
            std::cout << "error: " << e.error << "\n";
            ++errors;
        } else {
            std::cout << e.verdict;
            if (e.exit_code == kExitDisagreement) std::cout << "  [probe disagreement]";
            if (e.exit_code == kExitUnsupported) std::cout << "  [unsupported]";
            std::cout << "\n";
        }
        exit_code = std::max(exit_code, e.exit_code);
    }
    std::cout << results.size() << " documents, " << errors << " errors, reports in " << out_dir
              << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classifier for algebraicity and global boundedness of "
                 "second-order P-recursive recurrences with degree-1 coefficients"};
    app.require_subcommand(1);

    ProbeOptions opt;
    bool as_json = false;
    bool with_probes = false;
    app.add_option("--depth", opt.depth, "series/term depth for probes")->capture_default_str();
    app.add_option("--prime-bound", opt.prime_bound, "denominator prime threshold")
        ->capture_default_str();
    app.add_option("--guess-deg-x", opt.guess_deg_x, "annihilator degree bound in x")
        ->capture_default_str();
    app.add_option("--guess-deg-y", opt.guess_deg_y, "annihilator degree bound in y")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON reports");

    std::string path;
    auto* decide = app.add_subcommand("decide", "classify a recurrence document");
    decide->add_option("file", path, "recurrence document (.rec or .json)")->required();
    decide->add_flag("--probe", with_probes, "run oracle cross-checks");

    long in = 0;
    std::string ia1, ia2, iq;
    auto* integral = app.add_subcommand("integral", "classify \\int x^n (1+a1 x+a2 x^2)^q dx");
    integral->add_option("n", in)->required();
    integral->add_option("a1", ia1)->required();
    integral->add_option("a2", ia2)->required();
    integral->add_option("q", iq)->required();

    auto* probe = app.add_subcommand("probe", "denominator forensics on a document's solution");
    probe->add_option("file", path)->required();

    auto* guess = app.add_subcommand("guess", "guess an annihilating polynomial of the solution");
    guess->add_option("file", path)->required();

    std::string corpus_dir, out_dir;
    unsigned jobs = 1;
    auto* corpus = app.add_subcommand("corpus", "decide every document in a directory");
    corpus->add_option("dir", corpus_dir)->required();
    corpus->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
    corpus->add_option("--out", out_dir, "report output directory");
    corpus->add_flag("--probe", with_probes, "run oracle cross-checks");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            RecurrenceDocument doc = load_document(path);
            DecideOutcome out = run_decide(doc, with_probes, opt);
            print_report(out.report, as_json);
            return out.exit_code;
        }
        if (integral->parsed()) return cmd_integral(in, ia1, ia2, iq, as_json);
        if (probe->parsed()) return cmd_probe(path, opt, as_json);
        if (guess->parsed()) return cmd_guess(path, opt, as_json);
        if (corpus->parsed()) return cmd_corpus(corpus_dir, opt, jobs, with_probes, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// hodge-psh: diamonds, disc sampling, Levi evaluation and verification suites.
// Exit codes: 0 success, 1 a check or suite found violations, 2 invalid input.

#include "hodgepsh/diamond.hpp"
#include "hodgepsh/errors.hpp"
#include "hodgepsh/json_io.hpp"
#include "hodgepsh/model.hpp"
#include "hodgepsh/parallel.hpp"
#include "hodgepsh/psh_verify.hpp"
#include "hodgepsh/suites.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace hodgepsh;

namespace {

constexpr int kOk = 0, kViolation = 1, kInvalid = 2;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

Json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Shortest text that reads back to the same double.
std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void check_format(const std::string& f) {
    if (f != "json" && f != "csv" && f != "text") throw InvalidInput("unknown format '" + f + "'");
}

struct DiamondArgs {
    std::string type, space{"both"}, format{"text"}, output;
    int h{6};
    bool check{false};
};

int cmd_diamond(const DiamondArgs& a) {
    check_format(a.format);
    const DegenerationModel model = build_model(parse_kind(a.type), a.h);
    std::vector<SpaceTag> spaces;
    if (a.space == "both")
        spaces = {SpaceTag::V, SpaceTag::H};
    else
        spaces = {parse_space(a.space)};

    std::vector<std::string> mismatches;
    Json j = Json::array();
    std::string text;
    for (SpaceTag sp : spaces) {
        const DiamondTable t = diamond(model, sp);
        if (a.check)
            for (const auto& m : check_diamond(t, marked_table(model.kind, a.h, sp), a.h))
                mismatches.push_back(space_name(sp) + ": " + m);
        if (a.format == "json")
            j.push_back(diamond_to_json(t));
        else if (a.format == "csv")
            text += diamond_csv(t);
        else
            text += diamond_text(t) + "\n";
    }
    if (a.format == "json") text = dump(spaces.size() == 1 ? j.front() : j);
    emit(text, a.output);
    for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
    if (a.check && mismatches.empty()) std::cerr << "check: all marked entries agree\n";
    return mismatches.empty() ? kOk : kViolation;
}

struct SampleArgs {
    std::string type, output;
    std::vector<double> tangentT1;
    std::optional<std::uint64_t> seed;
    int h{6}, degree{2}, tangency{1};
    double bound{0.05};
    bool unanchored{false}, fibre{false};
};

int cmd_sample(const SampleArgs& a) {
    if (!a.seed) throw InvalidInput("--seed is required");
    const Kind kind = parse_kind(a.type);
    HorizontalDisc d;
    if (!a.tangentT1.empty()) {
        if (a.tangentT1.size() != 2) throw InvalidInput("--tangent-t1 takes re,im");
        d = make_tangent_disc(kind, a.h, *a.seed, cd(a.tangentT1[0], a.tangentT1[1]), a.degree, a.bound);
    } else {
        d = make_horizontal_disc(kind, a.h, *a.seed, a.degree, a.tangency, a.bound, {!a.unanchored, a.fibre});
    }
    emit(dump(disc_to_json(d)), a.output);
    return kOk;
}

struct LeviArgs {
    std::string disc, rho{"sum"}, format{"json"}, output;
    std::vector<double> radii, at;
    double theta{0.0};
};

int cmd_levi(const LeviArgs& a) {
    check_format(a.format);
    const RhoSelector rho = parse_rho(a.rho);
    const HorizontalDisc d = disc_from_json(read_json(a.disc));
    if (a.at.size() % 2 != 0) throw InvalidInput("--at takes re,im pairs");
    if (a.radii.empty() && a.at.empty()) throw InvalidInput("give --radii or --at");

    struct Sample {
        std::optional<double> radius;
        cd s;
    };
    std::vector<Sample> samples;
    const bool crossing = !d.frozen && d.tangency >= 1;
    for (double r : a.radii) {
        if (!(r > 0.0)) throw InvalidInput("radii must be positive");
        // crossing discs: r is |t1|; otherwise r is |s|
        samples.push_back({r, crossing ? parameter_for_t1(d, r, a.theta) : std::polar(r, a.theta)});
    }
    for (size_t i = 0; i < a.at.size(); i += 2) samples.push_back({std::nullopt, cd(a.at[i], a.at[i + 1])});

    Json rows = Json::array();
    std::ostringstream csv, text;
    csv << "radius,theta,s_re,s_im,rho,value,levi\n";
    for (const auto& smp : samples) {
        const double v = rho_value(d, smp.s, rho);
        const double l = levi(d, smp.s, rho);
        Json r;
        if (smp.radius) r["radius"] = *smp.radius;
        r["s"] = complex_to_json(smp.s);
        r["value"] = v;
        r["levi"] = l;
        rows.push_back(std::move(r));
        csv << (smp.radius ? num(*smp.radius) : "") << "," << num(a.theta) << "," << num(smp.s.real()) << ","
            << num(smp.s.imag()) << "," << rho_name(rho) << "," << num(v) << "," << num(l) << "\n";
        text << "s = (" << num(smp.s.real()) << ", " << num(smp.s.imag()) << ")  " << rho_name(rho) << " = " << num(v)
             << "  levi = " << num(l) << "\n";
    }
    if (a.format == "json") {
        Json j;
        j["rho"] = rho_name(rho);
        j["theta"] = a.theta;
        j["samples"] = std::move(rows);
        emit(dump(j), a.output);
    } else {
        emit(a.format == "csv" ? csv.str() : text.str(), a.output);
    }
    return kOk;
}

struct VerifyArgs {
    std::string type{"all"}, suites, format{"json"}, output;
    std::optional<std::uint64_t> seed;
    std::optional<int> h;
    int trials{50}, degree{2};
    double bound{0.05};
    std::optional<int> threads;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string reports_csv(const Json& reports) {
    std::ostringstream os;
    os << "suite,type,h,trials,seed,kind,name,value\n";
    for (const auto& r : reports) {
        const std::string head = r["suite"].get<std::string>() + "," + r["type"].get<std::string>() + "," +
                                 std::to_string(r["h"].get<int>()) + "," + std::to_string(r["trials"].get<int>()) +
                                 "," + std::to_string(r["seed"].get<std::uint64_t>());
        for (const auto& [k, v] : r["worstMargins"].items()) os << head << ",margin," << k << "," << num(v.get<double>()) << "\n";
        for (const auto& v : r["violations"])
            os << head << ",violation," << v["trial"].get<int>() << ","
               << (v.contains("value") ? num(v["value"].get<double>()) : "") << "\n";
    }
    return os.str();
}

std::string reports_text(const Json& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        const bool applicable = r["applicable"].get<bool>();
        const size_t nv = r["violations"].size();
        os << (applicable ? (nv == 0 ? "PASS " : "FAIL ") : "n/a  ") << r["type"].get<std::string>() << " h="
           << r["h"].get<int>() << " " << r["suite"].get<std::string>() << " trials=" << r["trials"].get<int>()
           << " violations=" << nv;
        for (const auto& [k, v] : r["worstMargins"].items()) os << " " << k << "=" << num(v.get<double>());
        os << "\n";
        for (const auto& n : r["notes"]) os << "     note: " << n.get<std::string>() << "\n";
        for (const auto& v : r["violations"]) os << "     trial " << v["trial"].get<int>() << ": " << v["message"].get<std::string>() << "\n";
    }
    return os.str();
}

std::string render_reports(const Json& doc, const std::string& format) {
    if (format == "csv") return reports_csv(doc["reports"]);
    if (format == "text") return reports_text(doc["reports"]);
    return dump(doc);
}

int cmd_verify(const VerifyArgs& a) {
    check_format(a.format);
    if (!a.seed) throw InvalidInput("--seed is required");
    if (a.trials < 1 || a.trials > 1000000) throw InvalidInput("--trials must be in 1..1000000");
    std::vector<Kind> kinds;
    if (a.type == "all")
        kinds = degenerate_kinds();
    else
        kinds = {parse_kind(a.type)};
    for (Kind k : kinds)
        if (k == Kind::Interior) throw InvalidInput("verify needs a boundary type");
    std::vector<std::string> suites = a.suites.empty() ? suite_names() : split(a.suites);
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw InvalidInput("unknown suite '" + s + "'");

    SuiteOptions o;
    o.trials = a.trials;
    o.seed = *a.seed;
    o.degree = a.degree;
    o.bound = a.bound;
    o.threads = a.threads ? *a.threads : default_threads();
    if (o.threads < 1) throw InvalidInput("--threads must be positive");

    // Validate every configuration before running anything.
    for (Kind k : kinds) {
        const int h = a.h ? *a.h : std::max(6, minimum_h(k));
        (void)make_horizontal_disc(k, h, 0, o.degree, 1, o.bound);
    }

    Json reports = Json::array();
    bool passed = true;
    for (Kind k : kinds) {
        const int h = a.h ? *a.h : std::max(6, minimum_h(k));
        for (const auto& s : suites) {
            const SuiteReport r = run_suite(s, k, h, o);
            passed = passed && r.passed();
            reports.push_back(suite_to_json(r));
        }
    }
    Json doc;
    doc["seed"] = o.seed;
    doc["trials"] = o.trials;
    doc["passed"] = passed;
    doc["reports"] = std::move(reports);
    emit(render_reports(doc, a.format), a.output);
    return passed ? kOk : kViolation;
}

int cmd_report_merge(const std::vector<std::string>& inputs, const std::string& format, const std::string& output) {
    check_format(format);
    if (inputs.empty()) throw InvalidInput("no reports to merge");
    Json reports = Json::array();
    bool passed = true;
    std::optional<Json> seed, trials;
    for (const auto& path : inputs) {
        const Json j = read_json(path);
        if (!j.is_object() || !j.contains("reports") || !j["reports"].is_array())
            throw InvalidInput("'" + path + "' is not a verify report");
        for (const auto& r : j["reports"]) {
            if (!r.contains("violations") || !r["violations"].is_array())
                throw InvalidInput("'" + path + "' has a report without violations");
            passed = passed && r["violations"].empty();
            reports.push_back(r);
        }
        if (!seed) seed = j.value("seed", Json());
        if (!trials) trials = j.value("trials", Json());
    }
    Json doc;
    doc["seed"] = *seed;
    doc["trials"] = *trials;
    doc["passed"] = passed;
    doc["reports"] = std::move(reports);
    emit(render_reports(doc, format), output);
    return passed ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge norm plurisubharmonicity verification"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
    app.set_help_all_flag("--help-all");

    DiamondArgs da;
    auto* diamondCmd = app.add_subcommand("diamond", "Deligne-splitting diamond of V and H = wedge^2 V");
    diamondCmd->add_option("--type", da.type, "degeneration type")->required();
    diamondCmd->add_option("--h", da.h, "Hodge number h = h^{1,1}");
    diamondCmd->add_option("--space", da.space, "V, H or both")->check(CLI::IsMember({"V", "H", "both"}));
    diamondCmd->add_flag("--check", da.check, "compare with the marked reference entries");
    diamondCmd->add_option("--format", da.format, "json, csv or text");
    diamondCmd->add_option("--output", da.output, "output file (default stdout)");

    SampleArgs sa;
    auto* sampleCmd = app.add_subcommand("sample", "draw a horizontal disc and print it as JSON");
    sampleCmd->add_option("--type", sa.type, "degeneration type")->required();
    sampleCmd->add_option("--h", sa.h, "Hodge number");
    sampleCmd->add_option("--seed", sa.seed, "64-bit seed")->required();
    sampleCmd->add_option("--degree", sa.degree, "polynomial degree of the free entries");
    sampleCmd->add_option("--tangency", sa.tangency, "t1 = s^k; 0 gives a disc in the divisor");
    sampleCmd->add_option("--bound", sa.bound, "coefficient bound");
    sampleCmd->add_flag("--unanchored", sa.unanchored, "let fibre-cutting entries move at s = 0");
    sampleCmd->add_flag("--fibre", sa.fibre, "fibre disc: fibre-cutting entries vanish");
    sampleCmd->add_option("--tangent-t1", sa.tangentT1, "frozen-t1 tangent disc at t1 = re,im")->delimiter(',');
    sampleCmd->add_option("--output", sa.output, "output file (default stdout)");

    LeviArgs la;
    auto* leviCmd = app.add_subcommand("levi", "evaluate rho and its Levi form along a disc");
    leviCmd->add_option("--disc", la.disc, "disc JSON file")->required();
    leviCmd->add_option("--radii", la.radii, "|t1| values (|s| for discs that do not cross)")->delimiter(',');
    leviCmd->add_option("--theta", la.theta, "argument of t1 (of s for discs that do not cross)");
    leviCmd->add_option("--at", la.at, "explicit parameter values re,im[,re,im...]")->delimiter(',');
    leviCmd->add_option("--rho", la.rho, "rho0, rho1 or sum");
    leviCmd->add_option("--format", la.format, "json, csv or text");
    leviCmd->add_option("--output", la.output, "output file (default stdout)");

    VerifyArgs va;
    auto* verifyCmd = app.add_subcommand("verify", "run verification suites");
    verifyCmd->add_option("--type", va.type, "degeneration type or 'all'");
    verifyCmd->add_option("--h", va.h, "Hodge number (default max(6, minimum))");
    verifyCmd->add_option("--trials", va.trials, "trials per suite");
    verifyCmd->add_option("--seed", va.seed, "master seed")->required();
    verifyCmd->add_option("--suites", va.suites, "comma-separated subset of suites");
    verifyCmd->add_option("--degree", va.degree, "polynomial degree of random discs");
    verifyCmd->add_option("--bound", va.bound, "coefficient bound");
    verifyCmd->add_option("--threads", va.threads, "worker threads (default HODGE_PSH_THREADS or hardware)");
    verifyCmd->add_option("--format", va.format, "json, csv or text");
    verifyCmd->add_option("--output", va.output, "output file (default stdout)");

    std::vector<std::string> mergeInputs;
    std::string mergeFormat = "json", mergeOutput;
    auto* mergeCmd = app.add_subcommand("report-merge", "combine verify reports");
    mergeCmd->add_option("inputs", mergeInputs, "report files")->required();
    mergeCmd->add_option("--format", mergeFormat, "json, csv or text");
    mergeCmd->add_option("--output", mergeOutput, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*diamondCmd) return cmd_diamond(da);
        if (*sampleCmd) return cmd_sample(sa);
        if (*leviCmd) return cmd_levi(la);
        if (*verifyCmd) return cmd_verify(va);
        if (*mergeCmd) return cmd_report_merge(mergeInputs, mergeFormat, mergeOutput);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}

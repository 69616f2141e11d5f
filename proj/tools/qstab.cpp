#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qstab/harness/backend.hpp"
#include "qstab/harness/pullback_report.hpp"
#include "qstab/numsg/classify.hpp"
#include "qstab/numsg/semigroup.hpp"
#include "qstab/order/literal.hpp"
#include "qstab/order/monogenic_order.hpp"
#include "qstab/pullback/counterexample.hpp"

using namespace qstab;
using harness::Json;

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

class Usage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Usage("cannot write " + out);
    f << text;
}

void emit(const Json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

Json tri_json(order::Tri t) {
    if (t == order::Tri::unknown) return "unknown";
    return t == order::Tri::yes;
}

void need(const std::string& action, std::size_t have, std::size_t lo, std::size_t hi) {
    if (have < lo || have > hi)
        throw Usage(action + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                    " ideal argument(s), got " + std::to_string(have));
}

struct OrderArgs {
    std::string poly;
    std::string action;
    std::vector<std::string> ideals;
    std::vector<long> primes;
    long search_height = 1000;
    long search_height_higher = 6;
    std::string out;
};

int cmd_order(const OrderArgs& a) {
    const auto o = order::MonogenicOrder::parse(a.poly);
    order::ClassifyOptions copts{a.search_height, a.search_height_higher};
    harness::OrderSystem sys(o, 6, copts);
    std::vector<order::FracIdeal> ideals;
    for (const auto& lit : a.ideals) ideals.push_back(order::parse_ideal(o, lit));

    Json out{{"order", o->to_string()}, {"action", a.action}};
    Json inputs = Json::array();
    for (const auto& i : ideals) inputs.push_back(sys.describe(i));
    out["inputs"] = inputs;
    int rc = kOk;
    const auto& act = a.action;
    const std::size_t n = ideals.size();

    if (act == "show") {
        need(act, n, 1, 64);
    } else if (act == "mul" || act == "sum" || act == "intersect" || act == "colon") {
        need(act, n, 2, 2);
        const auto& x = ideals[0];
        const auto& y = ideals[1];
        out["result"] = sys.describe(act == "mul" ? order::mul(x, y)
                                     : act == "sum" ? order::sum(x, y)
                                     : act == "intersect" ? order::intersect(x, y)
                                                          : order::colon(x, y));
    } else if (act == "inverse" || act == "v-closure" || act == "t-closure" || act == "multiplier-ring") {
        need(act, n, 1, 1);
        const auto& x = ideals[0];
        out["result"] = sys.describe(act == "inverse" ? order::inverse(x)
                                     : act == "v-closure" ? order::v_closure(x)
                                     : act == "t-closure" ? order::t_closure_fg(x)
                                                          : order::multiplier_ring(x));
    } else if (act == "classify") {
        need(act, n, 1, 1);
        const auto v = order::classify(ideals[0], copts);
        out["result"] = {{"invertible", v.invertible},
                         {"divisorial", v.divisorial},
                         {"stable", v.stable},
                         {"strongly_stable", tri_json(v.strongly_stable)},
                         {"quasi_stable", v.quasi_stable},
                         {"multiplier_ring", sys.describe(v.multiplier_ring)}};
    } else if (act == "flatness") {
        need(act, n, 1, 2);
        const auto base = n == 2 ? ideals[1] : sys.unit();
        const auto cert = order::flatness_certificate(ideals[0], base);
        if (std::holds_alternative<order::Flat>(cert)) {
            out["result"] = {{"flat", true}};
        } else if (const auto* nf = std::get_if<order::NotFlat>(&cert)) {
            out["result"] = {{"flat", false},
                             {"j", sys.describe(nf->j)},
                             {"colon_side", sys.describe(nf->colon_side)},
                             {"product_side", sys.describe(nf->product_side)},
                             {"a", sys.describe(nf->a)},
                             {"b", sys.describe(nf->b)}};
        } else {
            out["result"] = {{"flat", "inconclusive"}};
            rc = kAssertionFailed;
        }
    } else if (act == "localize") {
        need(act, n, 1, 1);
        Json rows = Json::array();
        std::vector<std::pair<long, bool>> probes;
        if (a.primes.empty()) {
            probes = sys.localize(ideals[0]);
        } else {
            for (long p : a.primes) probes.emplace_back(p, order::localize_check(ideals[0], p));
        }
        for (auto [p, ok] : probes) {
            rows.push_back({{"p", p}, {"holds", ok}});
            if (!ok) rc = kAssertionFailed;
        }
        out["result"] = rows;
    } else if (act == "equal") {
        need(act, n, 2, 2);
        const bool eq = ideals[0] == ideals[1];
        out["result"] = {{"equal", eq}};
        if (!eq) rc = kAssertionFailed;
    } else if (act == "maximal-order") {
        need(act, n, 0, 0);
        const auto m = order::maximal_order(o);
        out["result"] = m ? sys.describe(*m) : Json(nullptr);
    } else {
        throw Usage("unknown order action \"" + act + "\"");
    }
    emit(out, a.out);
    return rc;
}

struct NumsgArgs {
    std::vector<std::string> args;
    long genus_bound = 12;
    bool list = false;
    std::string format = "json";
    std::string out;
};

Json row_json(const harness::NumsgSystem& sys, const numsg::IdealRow& r) {
    return {{"ideal", sys.describe(r.ideal)},
            {"invertible", r.invertible},
            {"stable", r.stable},
            {"divisorial", r.divisorial},
            {"t_ideal_over_multiplier", r.t_ideal_over_multiplier}};
}

int cmd_semigroups(const NumsgArgs& a) {
    if (a.genus_bound > 20) throw Usage("--genus-bound above 20 is not supported for enumeration");
    const auto all = numsg::enumerate_semigroups(a.genus_bound);
    std::vector<long> counts(static_cast<std::size_t>(a.genus_bound + 1));
    Json list = Json::array();
    for (const auto& s : all) {
        ++counts[static_cast<std::size_t>(s.genus())];
        if (a.list) list.push_back({{"semigroup", s.to_string()}, {"genus", s.genus()}, {"frobenius", s.frobenius()}});
    }
    Json out{{"genus_bound", a.genus_bound}, {"counts_by_genus", counts}, {"total", all.size()}};
    if (a.list) out["semigroups"] = list;
    emit(out, a.out);
    return kOk;
}

int cmd_numsg(const NumsgArgs& a) {
    if (a.args.empty()) throw Usage("numsg needs a semigroup and an action, or \"semigroups\"");
    if (a.args[0] == "semigroups") return cmd_semigroups(a);
    if (a.args.size() < 2) throw Usage("numsg needs an action after the semigroup");
    const auto s = numsg::parse_semigroup(a.args[0]);
    harness::NumsgSystem sys(s, a.genus_bound);
    const std::string& act = a.args[1];
    std::vector<numsg::RelativeIdeal> ideals;
    for (std::size_t k = 2; k < a.args.size(); ++k) ideals.push_back(numsg::parse_relative_ideal(s, a.args[k]));
    const std::size_t n = ideals.size();

    Json out{{"semigroup", s->to_string()}, {"action", act}};
    Json inputs = Json::array();
    for (const auto& i : ideals) inputs.push_back(sys.describe(i));
    out["inputs"] = inputs;
    int rc = kOk;

    if (act == "info") {
        need(act, n, 0, 0);
        out["result"] = {{"minimal_generators", s->minimal_generators()},
                         {"gaps", s->gaps()},
                         {"genus", s->genus()},
                         {"frobenius", s->frobenius()},
                         {"conductor", s->conductor()},
                         {"multiplicity", s->multiplicity()}};
    } else if (act == "classify") {
        need(act, n, 1, 1);
        const auto v = sys.classify(ideals[0]);
        Json r = row_json(sys, numsg::classify(ideals[0]));
        r["quasi_stable"] = v.quasi_stable;
        r["multiplier"] = sys.describe(numsg::multiplier(ideals[0]));
        out["result"] = r;
    } else if (act == "classify-all") {
        need(act, n, 0, 0);
        const auto table = numsg::classify_all(s, a.genus_bound);
        if (a.format == "csv") {
            std::string csv = "ideal,generators,invertible,stable,divisorial,t_ideal_over_multiplier\n";
            auto b = [](bool x) { return x ? "true" : "false"; };
            for (const auto& r : table.rows)
                csv += "\"" + r.ideal.to_string() + "\",\"" + r.ideal.generator_string() + "\"," + b(r.invertible) + "," +
                       b(r.stable) + "," + b(r.divisorial) + "," + b(r.t_ideal_over_multiplier) + "\n";
            emit(csv, a.out);
            return kOk;
        }
        Json rows = Json::array();
        for (const auto& r : table.rows) rows.push_back(row_json(sys, r));
        out["result"] = {{"subsets_examined", table.subsets_examined},
                         {"ideals", table.rows.size()},
                         {"invertible", table.invertible},
                         {"stable", table.stable},
                         {"divisorial", table.divisorial},
                         {"t_ideal_over_multiplier", table.t_ideal_over_multiplier},
                         {"rows", rows}};
    } else if (act == "add" || act == "unite" || act == "intersect" || act == "subtract") {
        need(act, n, 2, 2);
        const auto& x = ideals[0];
        const auto& y = ideals[1];
        out["result"] = sys.describe(act == "add" ? numsg::add(x, y)
                                     : act == "unite" ? numsg::unite(x, y)
                                     : act == "intersect" ? numsg::intersect(x, y)
                                                          : numsg::subtract(x, y));
    } else if (act == "dual" || act == "multiplier" || act == "normalize") {
        need(act, n, 1, 1);
        const auto& x = ideals[0];
        out["result"] = sys.describe(act == "dual" ? numsg::dual_v(x)
                                     : act == "multiplier" ? numsg::multiplier(x)
                                                           : x.normalized());
    } else if (act == "flatness") {
        need(act, n, 1, 2);
        const auto base = n == 2 ? ideals[1] : sys.unit();
        const auto cert = numsg::flatness_certificate(ideals[0], base);
        if (std::holds_alternative<numsg::Flat>(cert)) {
            out["result"] = {{"flat", true}};
        } else if (const auto* nf = std::get_if<numsg::NotFlat>(&cert)) {
            out["result"] = {{"flat", false},
                             {"j", sys.describe(nf->j)},
                             {"a", sys.describe(nf->a)},
                             {"b", sys.describe(nf->b)}};
        } else {
            out["result"] = {{"flat", "inconclusive"}};
            rc = kAssertionFailed;
        }
    } else if (act == "equal") {
        need(act, n, 2, 2);
        const bool eq = ideals[0] == ideals[1];
        out["result"] = {{"equal", eq}};
        if (!eq) rc = kAssertionFailed;
    } else {
        throw Usage("unknown numsg action \"" + act + "\"");
    }
    emit(out, a.out);
    return rc;
}

struct PullbackArgs {
    std::string mode;
    long prime_bound = 100;
    int degree_bound = 5;
    std::optional<long> growth_to;
    std::vector<std::string> checks{"all"};
    std::string out;
};

int cmd_pullback(const PullbackArgs& a) {
    if (!a.mode.empty() && a.mode != "counterexample") throw Usage("unknown pullback mode \"" + a.mode + "\"");
    harness::PullbackOptions opts;
    opts.prime_bound = a.prime_bound;
    opts.degree_bound = a.degree_bound;
    opts.growth_to = a.growth_to;
    opts.divisoriality = opts.local_principality = opts.growth = false;
    for (const auto& c : a.checks) {
        if (c == "all")
            opts.divisoriality = opts.local_principality = opts.growth = true;
        else if (c == "not-divisorial")
            opts.divisoriality = true;
        else if (c == "locally-principal")
            opts.local_principality = true;
        else if (c == "strict-growth")
            opts.growth = true;
        else
            throw Usage("unknown pullback check \"" + c + "\"");
    }
    const Json out = harness::pullback_witnesses(opts);
    emit(out, a.out);
    return out["ok"].get<bool>() ? kOk : kAssertionFailed;
}

struct VerifyArgs {
    std::vector<std::string> backends{"order:x^2+3", "numsg:3,4,5"};
    std::vector<std::string> checks{"all"};
    harness::CheckOptions opts;
    long genus_bound = 12;
    std::string format = "json";
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    const auto names = harness::resolve_checks(a.checks);
    std::vector<harness::Backend> backends;
    for (const auto& name : a.backends) backends.push_back(harness::make_backend(name, a.genus_bound));

    std::vector<harness::TheoremReport> reports;
    for (const auto& b : backends) {
        for (auto& r : harness::run_suite(b, names, a.opts)) {
            std::cerr << r.backend << " " << r.claim_id << ": " << r.status << " (" << r.samples << " samples, "
                      << r.failures << " failures)\n";
            reports.push_back(std::move(r));
        }
    }
    long failures = 0;
    for (const auto& r : reports) failures += r.failures;

    if (a.format == "csv") {
        emit(harness::reports_to_csv(reports), a.out);
    } else {
        Json out{{"seed", a.opts.seed}, {"samples", a.opts.samples}, {"backends", a.backends}};
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(r.to_json());
        out["reports"] = rs;
        out["failures"] = failures;
        emit(out, a.out);
    }
    return failures == 0 ? kOk : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ideal arithmetic and flatness checks for orders, numerical semigroups and Z + XQ[X]"};
    app.require_subcommand(1, 1);

    OrderArgs oa;
    auto* order_cmd = app.add_subcommand("order", "Ideals of the monogenic order Z[x]/(f)");
    order_cmd->add_option("poly", oa.poly, "Monic irreducible polynomial, e.g. x^2+3")->required();
    order_cmd
        ->add_option("action", oa.action,
                     "show | mul | sum | intersect | colon | inverse | v-closure | t-closure | multiplier-ring | "
                     "classify | flatness | localize | equal | maximal-order")
        ->required();
    order_cmd->add_option("ideals", oa.ideals, "Ideal literals such as \"(2, 1+x)\"");
    order_cmd->add_option("--prime", oa.primes, "Primes for localize (default: primes of the discriminant and covolume, and 2, 3, 5, 7)");
    order_cmd->add_option("--search-height", oa.search_height, "Generator search height for real quadratic orders");
    order_cmd->add_option("--search-height-cubic", oa.search_height_higher, "Generator search box height in degree >= 3");
    order_cmd->add_option("--out", oa.out, "Write the JSON result here");

    NumsgArgs na;
    auto* numsg_cmd = app.add_subcommand("numsg", "Relative ideals of a numerical semigroup");
    numsg_cmd
        ->add_option("args", na.args,
                     "<gens> <action> [ideals...] with action info | classify | classify-all | add | unite | "
                     "intersect | subtract | dual | multiplier | normalize | flatness | equal; or \"semigroups\"")
        ->required();
    numsg_cmd->add_option("--genus-bound", na.genus_bound, "Largest genus for exhaustive work")->capture_default_str();
    numsg_cmd->add_flag("--list", na.list, "List every semigroup (semigroups action)");
    numsg_cmd->add_option("--format", na.format, "json or csv (classify-all)")->check(CLI::IsMember({"json", "csv"}));
    numsg_cmd->add_option("--out", na.out, "Write the result here");

    PullbackArgs pa;
    auto* pb_cmd = app.add_subcommand("pullback", "Witnesses for the ideal of Z + X*Q[X] generated by the X/p");
    pb_cmd->add_option("mode", pa.mode, "counterexample (the only mode)");
    pb_cmd->add_option("--prime-bound", pa.prime_bound, "Primes p <= P generate the truncated ideal")->capture_default_str();
    pb_cmd->add_option("--degree-bound", pa.degree_bound, "Degrees tracked")->capture_default_str();
    pb_cmd->add_option("--growth-to", pa.growth_to, "Growth probe upper bound (default 2P)");
    pb_cmd->add_option("--checks", pa.checks, "all | not-divisorial | locally-principal | strict-growth")->delimiter(',');
    pb_cmd->add_option("--out", pa.out, "Write the JSON witnesses here");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks");
    verify_cmd->add_option("--backend", va.backends, "order:<poly> or numsg:<gens>; repeatable")->take_all();
    verify_cmd->add_option("--checks", va.checks, "Comma-separated check names or all")->delimiter(',');
    verify_cmd->add_option("--seed", va.opts.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("-n,--samples", va.opts.samples, "Samples per check")->capture_default_str()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--pairs", va.opts.pairs_per_ideal, "Pairs drawn per sampled ideal")->capture_default_str();
    verify_cmd->add_flag("--invertible-only", va.opts.invertible_only, "flat_criterion draws invertible ideals only");
    verify_cmd->add_option("--genus-bound", va.genus_bound, "Enumerate numsg ideals up to this genus")->capture_default_str();
    verify_cmd->add_option("--format", va.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", va.out, "Write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*order_cmd) return cmd_order(oa);
        if (*numsg_cmd) return cmd_numsg(na);
        if (*pb_cmd) return cmd_pullback(pa);
        if (*verify_cmd) return cmd_verify(va);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

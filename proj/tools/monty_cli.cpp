// Command-line front end: generate geometric progressions, run the
// selection pipeline, verify check batteries, and rank candidate pairs.
// All streams are line-delimited JSON records.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or parse errors,
// 3 when a run produced only factor records (actionable for factoring).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monty/records.hpp"

namespace {

using namespace monty;

bool log_enabled() {
    const char* v = std::getenv("MONTY_LOG");
    return v != nullptr && *v != '\0';
}

void logv(const std::string& msg) {
    if (log_enabled()) std::cerr << "monty: " << msg << "\n";
}

std::vector<Rat> parse_skew_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        Rat s = parse_rat(item);
        if (s <= 0) throw std::invalid_argument("skew must be positive: " + item);
        out.push_back(s);
    }
    if (out.empty()) throw std::invalid_argument("empty skew list");
    return out;
}

struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

std::vector<Record> read_input(const std::string& path) {
    if (path.empty()) return read_records(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    return read_records(in);
}

struct GenGpArgs {
    std::string n;
    std::string family = "d2";
    std::string a, k, p, m;
    bool search = false;
    std::size_t count = 5;
    unsigned long seed = 0;
    bool seed_given = false;
    std::string size_target = "0";
    std::string skews = "1,2,7/5,1/3";
    std::string output;
};

int run_gen_gp(const GenGpArgs& args) {
    Int n = parse_int(args.n);
    if (n < 2) throw std::invalid_argument("--n must be >= 2");
    OutputStream out(args.output);
    std::size_t factors = 0, gps = 0;

    auto emit = [&](const GpOutcome& outcome, const GpParams& params) {
        if (const auto* gp = std::get_if<GeometricProgression>(&outcome)) {
            out.get() << to_line(GpRecord{*gp, params}) << "\n";
            ++gps;
        } else {
            out.get() << to_line(FactorRecord{std::get<FactorFound>(outcome)}) << "\n";
            ++factors;
        }
    };

    if (args.search) {
        if (!args.seed_given)
            throw CLI::ValidationError("gen-gp", "--seed is required with --search");
        GpSearchOptions opts;
        opts.count = args.count;
        opts.seed = args.seed;
        opts.size_target = parse_int(args.size_target);
        opts.skews = parse_skew_list(args.skews);
        if (args.family == "d2") {
            for (const GPParamsD2& q : search_gp_d2(n, opts))
                emit(build_gp_d2(q, n), GpParams{q.a, q.k, q.p, q.m});
        } else if (args.family == "d3") {
            for (const GPParamsD3& q : search_gp_d3(n, opts))
                emit(build_gp_d3(q, n), GpParams{q.a, q.k, q.p, q.m});
        } else {
            throw CLI::ValidationError("gen-gp", "--family must be d2 or d3");
        }
        logv("search emitted " + std::to_string(gps) + " gp record(s)");
    } else {
        if (args.a.empty() || args.k.empty() || args.p.empty() || args.m.empty())
            throw CLI::ValidationError("gen-gp", "--a --k --p --m are required without --search");
        GpParams params{parse_int(args.a), parse_int(args.k), parse_int(args.p),
                        parse_int(args.m)};
        if (args.family == "d2")
            emit(build_gp_d2(GPParamsD2{params.a, params.k, params.p, params.m}, n), params);
        else if (args.family == "d3")
            emit(build_gp_d3(GPParamsD3{params.a, params.k, params.p, params.m}, n), params);
        else
            throw CLI::ValidationError("gen-gp", "--family must be d2 or d3");
    }
    return (factors > 0 && gps == 0) ? 3 : 0;
}

struct StreamArgs {
    std::string input;
    std::string output;
    std::string skews = "1,2,7/5,1/3";
    std::vector<std::string> batteries;
    unsigned long seed = 0;
};

int run_select(const StreamArgs& args) {
    std::vector<Rat> grid = parse_skew_list(args.skews);
    std::vector<Record> records = read_input(args.input);
    OutputStream out(args.output);
    std::size_t pairs = 0, factors = 0;

    for (const Record& rec : records) {
        const auto* gp_rec = std::get_if<GpRecord>(&rec);
        if (!gp_rec) {
            out.get() << to_line(rec) << "\n";  // pass through non-GP records
            continue;
        }
        Record result = [&]() -> Record {
            GeometricProgression gp;
            try {
                GpOutcome v = validate_gp(gp_rec->gp.c, gp_rec->gp.modulus, gp_rec->gp.ratio);
                if (auto* ff = std::get_if<FactorFound>(&v)) return FactorRecord{*ff};
                gp = std::get<GeometricProgression>(std::move(v));
            } catch (const NotAGPError& e) {
                return DegenerateRecord{gp_rec->gp.modulus, std::string("not a GP: ") + e.what()};
            }
            SkewSearchResult best = skew_search(gp, grid);
            if (auto* pair = std::get_if<PolyPair>(&best.outcome))
                return PairRecord{std::move(*pair), gp.c};
            if (auto* ff = std::get_if<FactorFound>(&best.outcome)) return FactorRecord{*ff};
            if (auto* dp = std::get_if<DegeneratePair>(&best.outcome))
                return DegenerateRecord{dp->modulus, dp->reason, dp->f1, dp->f2};
            const auto& dg = std::get<DegenerateGP>(best.outcome);
            return DegenerateRecord{dg.modulus, dg.reason};
        }();
        if (std::holds_alternative<PairRecord>(result)) ++pairs;
        if (std::holds_alternative<FactorRecord>(result)) ++factors;
        out.get() << to_line(result) << "\n";
    }
    logv("select: " + std::to_string(pairs) + " pair(s), " + std::to_string(factors) +
         " factor(s)");
    return (factors > 0 && pairs == 0) ? 3 : 0;
}

// Rebuild derived pair fields from the polynomials themselves so that
// verification judges the record's actual content; flags stored metadata
// that disagrees.
std::pair<PolyPair, bool> rebuild_pair(const PairRecord& rec,
                                       const std::optional<GeometricProgression>& gp) {
    PolyPair fresh = rec.pair;
    fresh.resultant = resultant(fresh.f1, fresh.f2);
    fresh.norm1_sq = skewed_norm_sq(fresh.f1, fresh.skew);
    fresh.norm2_sq = skewed_norm_sq(fresh.f2, fresh.skew);
    fresh.sin2 = sin2_theta(fresh.f1, fresh.f2, fresh.skew);
    bool ok = fresh.resultant == rec.pair.resultant && fresh.norm1_sq == rec.pair.norm1_sq &&
              fresh.norm2_sq == rec.pair.norm2_sq && fresh.sin2 == rec.pair.sin2;
    if (gp) {
        HankelStack stack = hankel_stack(*gp);
        fresh.delta_partial = delta(stack.partial(1));
        fresh.delta_hat = delta(stack.partial_hat());
        fresh.delta_c = delta(hankel_from_seq(gp->c, 1, gp->c.size()));
        ok = ok && fresh.delta_partial == rec.pair.delta_partial &&
             fresh.delta_hat == rec.pair.delta_hat && fresh.delta_c == rec.pair.delta_c;
    }
    return {std::move(fresh), ok};
}

int run_verify(const StreamArgs& args) {
    VerifyConfig config;
    config.skews = parse_skew_list(args.skews);
    config.batteries = args.batteries;
    config.seed = args.seed;

    std::vector<Record> records = read_input(args.input);
    std::vector<VerifyInstance> instances;
    for (std::size_t i = 0; i < records.size(); ++i) {
        char id[32];
        std::snprintf(id, sizeof(id), "rec-%04zu", i);
        VerifyInstance inst;
        inst.id = id;
        try {
            if (const auto* gp_rec = std::get_if<GpRecord>(&records[i])) {
                inst.gp = gp_rec->gp;
            } else if (const auto* pair_rec = std::get_if<PairRecord>(&records[i])) {
                if (pair_rec->gp_c)
                    inst.gp = GeometricProgression{*pair_rec->gp_c, pair_rec->pair.modulus,
                                                   pair_rec->pair.root};
                auto [fresh, consistent] = rebuild_pair(*pair_rec, inst.gp);
                inst.pair = std::move(fresh);
                inst.extra_checks.push_back(
                    CheckResult{"record.consistent",
                                consistent ? CheckStatus::pass : CheckStatus::fail,
                                {}});
            } else {
                continue;  // factor/degenerate records carry nothing to verify
            }
        } catch (const std::exception& e) {
            inst.gp.reset();
            inst.pair.reset();
            inst.extra_checks.push_back(CheckResult{
                "record.well-formed", CheckStatus::fail, {{"error", e.what()}}});
        }
        instances.push_back(std::move(inst));
    }

    VerifyBatch batch = batch_verify(instances, config);
    OutputStream out(args.output);
    for (const VerifyReport& rep : batch.reports)
        for (const CheckResult& check : rep.checks)
            out.get() << report_line(rep.instance, check) << "\n";
    out.get() << summary_line(batch) << "\n";
    logv("verify: " + std::to_string(batch.failed) + " failure(s)");
    return batch.ok() ? 0 : 1;
}

int run_rank(const StreamArgs& args) {
    std::vector<Rat> grid = parse_skew_list(args.skews);
    std::vector<Record> records = read_input(args.input);

    std::vector<std::pair<Rat, const Record*>> scored;
    std::vector<const Record*> others;
    for (const Record& rec : records) {
        const auto* pair_rec = std::get_if<PairRecord>(&rec);
        if (!pair_rec) {
            others.push_back(&rec);
            continue;
        }
        const PolyPair& p = pair_rec->pair;
        std::size_t d1 = p.f1.degree(), d2 = p.f2.degree();
        Rat best(0);
        bool first = true;
        for (const Rat& s : grid) {
            Rat score = rat_pow(skewed_norm_sq(p.f1, s), d2) *
                        rat_pow(skewed_norm_sq(p.f2, s), d1) /
                        Rat(p.modulus * p.modulus);
            if (first || score < best) {
                best = score;
                first = false;
            }
        }
        scored.emplace_back(best, &rec);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    OutputStream out(args.output);
    for (const auto& [score, rec] : scored) out.get() << to_line(*rec) << "\n";
    for (const Record* rec : others) out.get() << to_line(*rec) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear polynomial selection via modular geometric progressions"};
    app.require_subcommand(1);
    app.set_config("--config");

    GenGpArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen-gp", "generate geometric progression records");
    gen->add_option("--n", gen_args.n, "modulus (decimal)")->required();
    gen->add_option("--family", gen_args.family, "GP family: d2 or d3");
    gen->add_option("--a", gen_args.a, "family parameter a");
    gen->add_option("--k", gen_args.k, "family parameter k");
    gen->add_option("--p", gen_args.p, "family parameter p");
    gen->add_option("--m", gen_args.m, "family parameter m");
    gen->add_flag("--search", gen_args.search, "search for small-norm parameter tuples");
    gen->add_option("--count", gen_args.count, "number of tuples to emit");
    gen->add_option("--seed", gen_args.seed, "search seed (required with --search)")
        ->each([&](const std::string&) { gen_args.seed_given = true; });
    gen->add_option("--size-target", gen_args.size_target, "cap on max |c_i| (0 = none)");
    gen->add_option("--skews", gen_args.skews, "comma list of rational skews for ranking");
    gen->add_option("--output", gen_args.output, "output file (default stdout)");

    StreamArgs select_args, verify_args, rank_args;
    CLI::App* sel = app.add_subcommand("select", "GP records -> polynomial pair records");
    sel->add_option("--input", select_args.input, "input file (default stdin)");
    sel->add_option("--output", select_args.output, "output file (default stdout)");
    sel->add_option("--skews", select_args.skews, "skew grid for the reduction search");

    CLI::App* ver = app.add_subcommand("verify", "run check batteries over records");
    ver->add_option("--input", verify_args.input, "input file (default stdin)");
    ver->add_option("--output", verify_args.output, "output file (default stdout)");
    ver->add_option("--skews", verify_args.skews, "skews for the bound checks");
    ver->add_option("--battery", verify_args.batteries,
                    "battery filter: theorem1 theorem2 bounds gpvol reduction divisibility "
                    "structural record");
    ver->add_option("--seed", verify_args.seed, "seed for derived instances");

    CLI::App* rnk = app.add_subcommand("rank", "sort pair records by optimality score");
    rnk->add_option("--input", rank_args.input, "input file (default stdin)");
    rnk->add_option("--output", rank_args.output, "output file (default stdout)");
    rnk->add_option("--skews", rank_args.skews, "skew grid for the score");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen_gp(gen_args);
        if (sel->parsed()) return run_select(select_args);
        if (ver->parsed()) return run_verify(verify_args);
        return run_rank(rank_args);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

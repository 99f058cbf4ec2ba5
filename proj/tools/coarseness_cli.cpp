#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "coarseness/approx.hpp"
#include "coarseness/coloring.hpp"
#include "coarseness/gen.hpp"
#include "coarseness/io.hpp"
#include "coarseness/svg.hpp"

namespace {

using namespace coarseness;
using Clock = std::chrono::steady_clock;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::optional<Clock::time_point> deadline_from(double budget_ms) {
    if (budget_ms <= 0) return std::nullopt;
    return Clock::now() + std::chrono::microseconds(static_cast<std::int64_t>(budget_ms * 1000));
}

ReportRecord base_record(const std::string& command, const ColoredPointSet& ps) {
    ReportRecord rec;
    rec.command = command;
    rec.n = ps.size();
    rec.r = ps.red_count();
    rec.b = ps.blue_count();
    return rec;
}

std::vector<std::vector<int>> partition_lists(const ConvexPartition& pi) {
    std::vector<std::vector<int>> out;
    for (const Island& b : pi.blocks) out.push_back(b.members);
    return out;
}

std::string coloring_string(const ColoredPointSet& ps) {
    std::string s;
    s.reserve(ps.size());
    for (Color c : ps.colors) s.push_back(c == Color::Red ? 'R' : 'B');
    return s;
}

void emit(ReportRecord& rec, Clock::time_point t0) {
    rec.timing_ms = ms_since(t0);
    std::cout << to_json(rec) << '\n';
}

struct ScalingOptions {
    std::vector<int> sizes;
    std::vector<std::uint64_t> seeds;
    std::string objective = "d1";
    std::string shape = "random-disc";
    double row_budget_ms = 60000.0;
    std::string out_csv = "scaling.csv";
    std::string out_svg = "scaling.svg";
};

Shape parse_shape(const std::string& s) {
    if (s == "grid") return Shape::Grid;
    if (s == "random-disc") return Shape::RandomDisc;
    if (s == "convex-gon") return Shape::ConvexGon;
    throw CLI::ValidationError("shape", "unknown shape " + s);
}

int run_scaling(const ScalingOptions& opt) {
    const Objective objective = opt.objective == "d2" ? Objective::D2 : Objective::D1;
    std::vector<ScalingRow> rows;
    for (int n : opt.sizes) {
        for (std::uint64_t seed : opt.seeds) {
            std::vector<Point> points = generate_points(parse_shape(opt.shape), n, seed);
            AngularOrders orders(points);
            for (const std::string& kind : {"balanced", "optimized", "random"}) {
                ScalingRow row;
                row.n = n;
                row.seed = seed;
                row.kind = kind;
                Clock::time_point t0 = Clock::now();
                auto deadline = deadline_from(opt.row_budget_ms);
                try {
                    ColoredPointSet ps;
                    if (kind == "random") {
                        ps = random_coloring(points, seed);
                    } else if (kind == "balanced") {
                        ps = balanced_coloring(points, seed);
                    } else {
                        ColoringSearchConfig cfg;
                        cfg.seed = seed;
                        cfg.restarts = 1;
                        cfg.max_flips = 2 * n;
                        cfg.objective = objective;
                        cfg.deadline = deadline;
                        ps = minimize_coarseness_coloring(points, cfg).coloring;
                    }
                    row.d1 = max_disc_halfplane(ps, orders).value;
                    row.d2 = max_disc_wedge(ps, orders, deadline).value;
                    row.certified_upper = 16 * row.d2;
                } catch (const BudgetExceeded&) {
                    // recorded as a budget-exceeded row; the run continues
                }
                row.elapsed_ms = ms_since(t0);
                rows.push_back(std::move(row));
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ScalingRow& a, const ScalingRow& b) {
        return std::tie(a.n, a.seed, a.kind) < std::tie(b.n, b.seed, b.kind);
    });
    std::string csv = scaling_csv(rows);
    std::cout << csv;
    if (!opt.out_csv.empty()) {
        std::ofstream f(opt.out_csv);
        f << csv;
    }
    if (!opt.out_svg.empty()) {
        std::ofstream f(opt.out_svg);
        f << svg_scaling_plot(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coarseness of bicolored planar point sets"};
    app.require_subcommand(1);

    std::string input = "-";
    double budget_ms = 0.0;
    app.add_option("--budget-ms", budget_ms, "wall-clock budget for heavy computations (0 = none)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance (points only, colored randomly)");
    std::string gen_shape = "random-disc";
    int gen_n = 8;
    std::uint64_t gen_seed = 0;
    Coord gen_span = Coord{1} << 19;
    std::string gen_out = "-";
    gen->add_option("shape", gen_shape, "grid | random-disc | convex-gon")->required();
    gen->add_option("n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--span", gen_span, "coordinate span");
    gen->add_option("--out", gen_out, "output file (- = stdout)");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "instance file (- = stdin)");
    };

    auto* disc_cmd = app.add_subcommand("disc", "discrepancy of the whole set");
    add_input(disc_cmd);
    auto* d1_cmd = app.add_subcommand("d1", "max discrepancy over halfplane islands");
    add_input(d1_cmd);
    auto* d2_cmd = app.add_subcommand("d2", "max discrepancy over wedge islands");
    add_input(d2_cmd);
    auto* dk_cmd = app.add_subcommand("dk", "max discrepancy over k-separable islands");
    int dk_k = 3;
    dk_cmd->add_option("--k", dk_k, "separability parameter")->required();
    add_input(dk_cmd);
    auto* exact_cmd = app.add_subcommand("coarse-exact", "exact coarseness (small n)");
    add_input(exact_cmd);
    auto* approx_cmd = app.add_subcommand("coarse-approx", "certified coarseness bounds");
    add_input(approx_cmd);

    auto* color_cmd = app.add_subcommand("color", "produce a coloring of the input points");
    std::string color_mode;
    std::uint64_t color_seed = 0;
    int color_restarts = 1, color_flips = 1000;
    std::string color_objective = "d2";
    color_cmd->add_option("--mode", color_mode, "random | balanced | minimize")->required();
    color_cmd->add_option("--seed", color_seed, "seed");
    color_cmd->add_option("--restarts", color_restarts, "restarts (minimize)");
    color_cmd->add_option("--max-flips", color_flips, "flip budget per restart (minimize)");
    color_cmd->add_option("--objective", color_objective, "d1 | d2 (minimize)");
    add_input(color_cmd);

    auto* check_cmd = app.add_subcommand("check-partition", "validate a partition into islands");
    std::string blocks_path;
    check_cmd->add_option("--blocks", blocks_path, "blocks file")->required();
    add_input(check_cmd);

    auto* shatter_cmd = app.add_subcommand("shatter", "equivalence classes of a random island family");
    int shatter_k = 2, shatter_m = 4;
    std::uint64_t shatter_seed = 0;
    shatter_cmd->add_option("--k", shatter_k, "separability parameter")->required();
    shatter_cmd->add_option("--m", shatter_m, "family size")->required();
    shatter_cmd->add_option("--seed", shatter_seed, "seed");
    add_input(shatter_cmd);

    auto* exp_cmd = app.add_subcommand("experiment", "experiment runner");
    auto* scaling_cmd = exp_cmd->add_subcommand("scaling", "d1/d2 scaling experiment");
    ScalingOptions sopt;
    scaling_cmd->add_option("--sizes", sopt.sizes, "point counts")->required();
    scaling_cmd->add_option("--seeds", sopt.seeds, "seeds")->required();
    scaling_cmd->add_option("--objective", sopt.objective, "d1 | d2 for the optimized kind");
    scaling_cmd->add_option("--shape", sopt.shape, "instance shape");
    scaling_cmd->add_option("--row-budget-ms", sopt.row_budget_ms, "per-row wall budget");
    scaling_cmd->add_option("--out-csv", sopt.out_csv, "CSV output file");
    scaling_cmd->add_option("--out-svg", sopt.out_svg, "SVG output file");
    exp_cmd->require_subcommand(1);

    auto* svg_cmd = app.add_subcommand("svg", "render an instance figure");
    std::string svg_out;
    svg_cmd->add_option("--out", svg_out, "output SVG file")->required();
    add_input(svg_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    const Clock::time_point t0 = Clock::now();
    try {
        if (gen->parsed()) {
            std::vector<Point> pts = generate_points(parse_shape(gen_shape), gen_n, gen_seed,
                                                     gen_span);
            ColoredPointSet ps = random_coloring(pts, gen_seed);
            if (gen_out == "-") {
                write_instance(std::cout, ps);
            } else {
                std::ofstream f(gen_out);
                if (!f) throw std::runtime_error("cannot open " + gen_out);
                write_instance(f, ps);
            }
            return 0;
        }
        if (scaling_cmd->parsed()) return run_scaling(sopt);

        ColoredPointSet ps = read_instance_file(input);

        if (disc_cmd->parsed()) {
            ReportRecord rec = base_record("disc", ps);
            rec.disc = ps.imbalance();
            emit(rec, t0);
        } else if (d1_cmd->parsed()) {
            ReportRecord rec = base_record("d1", ps);
            MaxDiscResult res = max_disc_halfplane(ps);
            rec.d1 = res.value;
            rec.witness_island = res.witness.members;
            emit(rec, t0);
        } else if (d2_cmd->parsed()) {
            ReportRecord rec = base_record("d2", ps);
            AngularOrders orders(ps.points);
            MaxDiscResult res = max_disc_wedge(ps, orders, deadline_from(budget_ms));
            rec.d2 = res.value;
            rec.witness_island = res.witness.members;
            emit(rec, t0);
        } else if (dk_cmd->parsed()) {
            ReportRecord rec = base_record("dk", ps);
            MaxDiscResult res = max_disc_k(ps, dk_k);
            rec.k = dk_k;
            rec.dk = res.value;
            rec.witness_island = res.witness.members;
            emit(rec, t0);
        } else if (exact_cmd->parsed()) {
            ReportRecord rec = base_record("coarse-exact", ps);
            CoarsenessResult res = exact_coarseness(ps);
            rec.value = res.value;
            rec.partitions_examined = res.partitions_examined;
            rec.partition = partition_lists(res.witness);
            emit(rec, t0);
        } else if (approx_cmd->parsed()) {
            ReportRecord rec = base_record("coarse-approx", ps);
            CoarsenessBounds res = approximate_coarseness(ps, deadline_from(budget_ms));
            rec.d2 = res.d2;
            rec.lower = res.lower;
            rec.upper = res.upper;
            rec.witness_disc = res.witness_disc;
            rec.partition = partition_lists(res.witness);
            rec.witness_island = res.wedge_island.members;
            emit(rec, t0);
        } else if (color_cmd->parsed()) {
            ReportRecord rec = base_record("color", ps);
            ColoredPointSet out;
            if (color_mode == "random") {
                out = random_coloring(ps.points, color_seed);
            } else if (color_mode == "balanced") {
                out = balanced_coloring(ps.points, color_seed);
            } else if (color_mode == "minimize") {
                ColoringSearchConfig cfg;
                cfg.seed = color_seed;
                cfg.restarts = color_restarts;
                cfg.max_flips = color_flips;
                cfg.objective = color_objective == "d1" ? Objective::D1 : Objective::D2;
                ColoringSearchResult res = minimize_coarseness_coloring(ps.points, cfg);
                out = std::move(res.coloring);
                rec.objective_value = res.objective_value;
                rec.certified_upper = res.certified_upper;
            } else {
                throw std::invalid_argument("unknown color mode " + color_mode);
            }
            rec.r = out.red_count();
            rec.b = out.blue_count();
            rec.coloring = coloring_string(out);
            emit(rec, t0);
        } else if (check_cmd->parsed()) {
            ReportRecord rec = base_record("check-partition", ps);
            ValidationResult res = validate_partition(ps, read_blocks_file(blocks_path));
            rec.valid = res.ok();
            if (res.ok()) {
                rec.disc = partition_disc(ps, *res.partition);
                rec.partition = partition_lists(*res.partition);
                emit(rec, t0);
            } else {
                rec.violation = res.violation->detail;
                emit(rec, t0);
                return kExitValidation;
            }
        } else if (shatter_cmd->parsed()) {
            ReportRecord rec = base_record("shatter", ps);
            std::vector<Halfplane> pool = canonical_halfplanes(ps);
            std::mt19937_64 rng(shatter_seed);
            std::vector<Island> family;
            for (int i = 0; i < shatter_m; ++i) {
                std::vector<Halfplane> cert;
                for (int j = 0; j < shatter_k; ++j)
                    cert.push_back(pool[rng() % pool.size()]);
                family.push_back(island_from_halfplanes(ps, cert));
            }
            ShatterCount sc = shatter_classes(ps, family, shatter_k);
            rec.k = sc.k;
            rec.m = sc.m;
            rec.classes = sc.classes;
            const bool convex_pos =
                convex_hull(ps.points).vertices.size() == ps.points.size();
            rec.shatter_bound = convex_pos
                                    ? std::uint64_t(4) * sc.k * sc.m
                                    : (std::uint64_t(sc.k) * sc.k + 4 * sc.k) * sc.m * sc.m;
            emit(rec, t0);
        } else if (svg_cmd->parsed()) {
            CoarsenessBounds res = approximate_coarseness(ps, deadline_from(budget_ms));
            std::ofstream f(svg_out);
            if (!f) throw std::runtime_error("cannot open " + svg_out);
            f << svg_instance(ps, res.wedge_island.certificate, &res.witness);
            ReportRecord rec = base_record("svg", ps);
            rec.d2 = res.d2;
            emit(rec, t0);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}

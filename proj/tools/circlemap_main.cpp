#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlemap/acceptance.hpp"
#include "circlemap/io.hpp"
#include "circlemap/parallel.hpp"

namespace {

using namespace circlemap;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open output file: " + out_path);
    out << text;
}

bool looks_like_json(const std::string& text)
{
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        return c == '{';
    }
    return false;
}

int round_up_pow2(int n)
{
    int p = 64;
    while (p < n && p < (1 << 24))
        p *= 2;
    return p;
}

struct Options {
    std::string input;
    std::string out;
    std::string format = "report-text";
    int grid = 4096;
    int window = 16;
    int steps = 10;
    std::uint64_t seed = 1;
    bool strict = false;
    std::vector<double> center;
    std::string export_curve;
};

int run_check_homeo(const Options& o)
{
    const RationalCircleMap f = parse_map_json(read_file(o.input));
    const CriterionReport rep = criterion_check(f, o.grid);
    write_output(o.out, o.format == "delimited" ? report_to_delimited(rep)
                                                : report_to_json(rep));
    if (o.strict && rep.verdict == Verdict::Inconclusive)
        return 3;
    return 0;
}

int run_fourier(const Options& o, bool grid_given)
{
    const std::string text = read_file(o.input);
    std::optional<SampledCircleMap> samples;
    if (looks_like_json(text)) {
        // Default resolution scales with the window so smooth quotients are
        // transformed well past their decay range.
        const int n = grid_given ? o.grid : std::max(1024, 8 * o.window);
        const RationalCircleMap f = parse_map_json(text);
        samples = sample_map([&f](cplx z) { return eval_quotient(f, z); },
                             round_up_pow2(n));
    } else {
        samples = parse_curve_delimited(text);
    }
    const FourierSpectrum sp = spectrum(*samples, o.window);
    write_output(o.out, spectrum_to_delimited(sp));
    return 0;
}

int run_homotopy(const Options& o)
{
    const RationalCircleMap f = parse_map_json(read_file(o.input));
    std::vector<CriterionReport> reports(o.steps + 1);
    parallel_for(0, o.steps + 1, [&](int i) {
        const double t = static_cast<double>(i) / o.steps;
        CriterionOptions opt;
        opt.grid_size = o.grid;
        reports[i] = criterion_check(scale_zeros(f, t), opt);
    });

    std::ostringstream table;
    table << "t\tverdict\tmargin_lower_bound\twitness_angle\tgrid_size\n";
    bool inconclusive = false;
    for (int i = 0; i <= o.steps; ++i) {
        const CriterionReport& r = reports[i];
        inconclusive |= r.verdict == Verdict::Inconclusive;
        table << format_double(static_cast<double>(i) / o.steps) << '\t'
              << to_string(r.verdict) << '\t' << format_double(r.margin_lower_bound)
              << '\t' << format_double(r.witness_angle) << '\t' << r.grid_size << '\n';
    }
    write_output(o.out, table.str());
    return (o.strict && inconclusive) ? 3 : 0;
}

int run_starlike(const Options& o)
{
    std::optional<SampledCircleMap> samples;
    std::optional<cplx> center;
    std::optional<StarlikeProfile> profile;
    if (!o.input.empty()) {
        samples = parse_curve_delimited(read_file(o.input));
    } else {
        StarlikeEmbedding emb =
            random_starlike_embedding(o.seed, 4, 4, round_up_pow2(o.grid));
        center = emb.profile.center;
        profile = emb.profile;
        samples = std::move(emb.samples);
    }
    if (!o.export_curve.empty())
        write_output(o.export_curve, profile ? curve_to_delimited(*samples, *profile)
                                             : curve_to_delimited(*samples));
    if (o.center.size() == 2)
        center = cplx(o.center[0], o.center[1]);
    if (!center)
        center = find_star_center(*samples);
    if (!center)
        throw ParseError("no star center found; pass one with --center");

    const bool starlike = starlike_about(*samples, *center);
    const EmbeddingReport rep = embedding_report(*samples, *center);
    const FourierSpectrum sp = spectrum(*samples, 1);
    const cplx c1 = sp.at(1), cm1 = sp.at(-1);

    std::ostringstream outbuf;
    if (o.format == "delimited") {
        outbuf << "starlike\tinjective\tsense_preserving\twinding\tmin_gap\t"
                  "center_re\tcenter_im\tc1_abs\tcm1_abs\n";
        outbuf << starlike << '\t' << rep.injective << '\t' << rep.sense_preserving << '\t'
               << rep.winding_number << '\t' << format_double(rep.min_pairwise_gap) << '\t'
               << format_double(center->real()) << '\t' << format_double(center->imag())
               << '\t' << format_double(std::abs(c1)) << '\t' << format_double(std::abs(cm1))
               << '\n';
    } else {
        outbuf << "{\n";
        outbuf << "  \"starlike\": " << (starlike ? "true" : "false") << ",\n";
        outbuf << "  \"center\": [" << format_double(center->real()) << ", "
               << format_double(center->imag()) << "],\n";
        outbuf << "  \"injective\": " << (rep.injective ? "true" : "false") << ",\n";
        outbuf << "  \"sense_preserving\": " << (rep.sense_preserving ? "true" : "false")
               << ",\n";
        outbuf << "  \"winding_number\": " << rep.winding_number << ",\n";
        outbuf << "  \"min_pairwise_gap\": " << format_double(rep.min_pairwise_gap) << ",\n";
        outbuf << "  \"c1\": [" << format_double(c1.real()) << ", " << format_double(c1.imag())
               << "],\n";
        outbuf << "  \"c_minus_1\": [" << format_double(cm1.real()) << ", "
               << format_double(cm1.imag()) << "]\n";
        outbuf << "}\n";
    }
    write_output(o.out, outbuf.str());
    return 0;
}

int run_sweep_degree2(const Options& o)
{
    const int resolution = o.steps;
    const int cells = resolution * resolution;
    struct Cell {
        double a, b;
        bool closed_form;
        Verdict verdict;
        double margin;
    };
    std::vector<Cell> table(cells);
    parallel_for(0, cells, [&](int idx) {
        const int i = idx / resolution;
        const int j = idx % resolution;
        const double a = -0.98 + 1.96 * (i + 1) / (resolution + 1.0);
        const double b = -0.98 + 1.96 * (j + 1) / (resolution + 1.0);
        const RationalCircleMap f{BlaschkeProduct(0.0, {cplx(a, 0.0), cplx(b, 0.0)}),
                                  BlaschkeProduct(0.0, {cplx(0.0, 0.0)})};
        CriterionOptions opt;
        opt.grid_size = o.grid;
        const CriterionReport rep = criterion_check(f, opt);
        table[idx] = {a, b, degree2_real_criterion(a, b), rep.verdict,
                      rep.margin_lower_bound};
    });

    std::ostringstream outbuf;
    outbuf << "a\tb\tclosed_form\tverdict\tmargin_lower_bound\n";
    bool inconclusive = false;
    for (const Cell& c : table) {
        inconclusive |= c.verdict == Verdict::Inconclusive;
        outbuf << format_double(c.a) << '\t' << format_double(c.b) << '\t' << c.closed_form
               << '\t' << to_string(c.verdict) << '\t' << format_double(c.margin) << '\n';
    }
    write_output(o.out, outbuf.str());
    return (o.strict && inconclusive) ? 3 : 0;
}

int run_verify_paper(const Options& o)
{
    std::ostringstream log;
    const std::vector<CheckResult> results = run_verification(o.out.empty() ? std::cout : log);
    if (!o.out.empty())
        write_output(o.out, log.str());
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rational circle homeomorphisms and circle embeddings toolkit"};
    app.require_subcommand(1);

    Options o;

    auto add_common = [&o](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("--input", o.input, "input file (map JSON or curve table)");
        cmd->add_option("--out", o.out, "write output here instead of stdout");
        cmd->add_flag("--strict", o.strict, "escalate Inconclusive verdicts to exit 3");
        return cmd;
    };

    CLI::App* check = add_common(app.add_subcommand("check-homeo",
        "decide whether a Blaschke quotient restricts to a circle homeomorphism"), true);
    check->add_option("--grid", o.grid, "initial criterion grid size")->check(CLI::PositiveNumber);
    check->add_option("--format", o.format, "report-text | delimited")
        ->check(CLI::IsMember({"report-text", "delimited"}));

    CLI::App* four = add_common(app.add_subcommand("fourier",
        "coefficient table of a map (JSON quotient) or sampled curve"), true);
    four->add_option("--grid", o.grid, "sample count for quotient inputs (rounded up to a power of two)")
        ->check(CLI::PositiveNumber);
    four->add_option("--window", o.window, "coefficient window half-width")
        ->check(CLI::PositiveNumber);

    CLI::App* homotopy = add_common(app.add_subcommand("homotopy",
        "zero-scaling sweep: per-t verdicts and certified margins"), true);
    homotopy->add_option("--steps", o.steps, "number of scaling steps")->check(CLI::PositiveNumber);
    homotopy->add_option("--grid", o.grid, "initial criterion grid size")->check(CLI::PositiveNumber);

    CLI::App* starlike = add_common(app.add_subcommand("starlike",
        "embedding report, starlikeness and first coefficients of a curve"), true);
    starlike->add_option("--seed", o.seed, "generate a random starlike embedding instead of reading --input");
    starlike->add_option("--grid", o.grid, "sample count for generated curves")->check(CLI::PositiveNumber);
    starlike->add_option("--center", o.center, "star center as two reals")->expected(2);
    starlike->add_option("--export-curve", o.export_curve,
                         "also write the curve table (with profile columns when generated)");
    starlike->add_option("--format", o.format, "report-text | delimited")
        ->check(CLI::IsMember({"report-text", "delimited"}));

    CLI::App* sweep = add_common(app.add_subcommand("sweep-degree2",
        "closed form vs certified criterion over real zero pairs"), false);
    sweep->add_option("--steps", o.steps, "grid resolution per axis (default 99)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--grid", o.grid, "initial criterion grid size")->check(CLI::PositiveNumber);

    add_common(app.add_subcommand("verify-paper",
        "run the full verification suite and print one line per check"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check_homeo(o);
        if (four->parsed())
            return run_fourier(o, four->count("--grid") > 0);
        if (homotopy->parsed())
            return run_homotopy(o);
        if (starlike->parsed()) {
            if (o.input.empty() && !starlike->count("--seed"))
                throw ParseError("starlike needs --input or --seed");
            return run_starlike(o);
        }
        if (sweep->parsed()) {
            if (!sweep->count("--steps"))
                o.steps = 99;
            if (!sweep->count("--grid"))
                o.grid = 1 << 16;
            return run_sweep_degree2(o);
        }
        return run_verify_paper(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CircleMapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

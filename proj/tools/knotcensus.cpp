#include <knotcensus/knotcensus.hpp>

#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace kc = knotcensus;

namespace {

int cmd_family(std::uint64_t n) {
    std::cout << kc::serialize(kc::build_family(n)) << "\n";
    return 0;
}

int cmd_mutants(std::uint64_t n, bool do_enumerate) {
    if (do_enumerate) {
        const kc::MontesinosLink fam = kc::build_family(n);
        const auto classes = kc::enumerate_mutant_classes(fam);
        if (n >= 2) {
            const kc::Int expected = kc::distinct_count_formula(n);
            if (kc::Int(classes.size()) != expected)
                throw kc::invariant_violation("enumerated " + std::to_string(classes.size()) +
                                              " classes but the count formula gives " +
                                              expected.str());
        }
        std::cout << "distinct mutant classes: " << classes.size() << "\n";
        for (const auto& key : classes) std::cout << key.str() << "\n";
    } else {
        const std::string count = kc::distinct_count_formula(n).str();
        std::cout << "distinct mutant classes: " << count << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path) {
    const kc::ClassifyReport report = kc::classify_file(path);
    for (std::size_t g = 0; g < report.groups.size(); ++g) {
        std::cout << "group " << g + 1 << ": " << report.groups[g].key << "\n";
        for (const auto& [lineno, text] : report.groups[g].members)
            std::cout << "  line " << lineno << ": " << text << "\n";
    }
    for (const auto& [lineno, reason] : report.rejected)
        std::cerr << "line " << lineno << ": " << reason << "\n";
    return 0;
}

int cmd_bounds(std::uint64_t n) {
    const kc::VolumeBound b = kc::volume_bounds(n);
    std::cout << "lower_oct: " << b.lower_oct.str() << "\n"
              << "upper_oct: " << b.upper_oct.str() << "\n"
              << "lower: " << kc::to_decimal_string(b.lower) << "\n"
              << "upper: " << kc::to_decimal_string(b.upper) << "\n";
    return 0;
}

int cmd_growth(std::uint64_t n_min, std::uint64_t n_max) {
    if (n_min < 2 || n_min > n_max)
        throw std::invalid_argument("growth range must satisfy 2 <= n-min <= n-max");
    for (std::uint64_t n = n_min; n <= n_max; ++n)
        std::cout << kc::certificate_to_json(kc::growth_certificate(n)).dump() << "\n";
    return 0;
}

void write_table(const std::vector<kc::CensusRecord>& records, std::ostream& out) {
    const std::array<std::string, 6> header = {"n",         "classes",   "enumerated",
                                               "lower_oct", "upper_oct", "growth"};
    std::vector<std::array<std::string, 6>> rows;
    for (const kc::CensusRecord& r : records)
        rows.push_back({std::to_string(r.n), r.knot_class_count.str(),
                        r.enumerated ? "yes" : "no", r.bounds.lower_oct.str(),
                        r.bounds.upper_oct.str(), r.growth_holds ? "yes" : "no"});
    std::array<std::size_t, 6> width{};
    for (std::size_t i = 0; i < 6; ++i) {
        width[i] = header[i].size();
        for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
    }
    auto emit = [&](const std::array<std::string, 6>& row) {
        for (std::size_t i = 0; i + 1 < 6; ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        out << row[5] << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

int cmd_census(std::uint64_t n_min, std::uint64_t n_max, const std::string& out_path,
               const std::string& format, std::size_t cap) {
    const std::vector<kc::CensusRecord> records = kc::run_census(n_min, n_max, cap);
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    if (format == "table") {
        write_table(records, out);
    } else {
        for (const kc::CensusRecord& r : records) out << kc::record_to_json(r).dump() << "\n";
    }
    if (!out.flush())
        throw std::invalid_argument("failed writing output file: " + out_path);
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Montesinos mutant census: families, mutant classes, volume growth"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::size_t cap = 11;
    bool do_enumerate = false;
    std::string input_path;
    std::string out_path;
    std::string format = "json";

    CLI::App* family = app.add_subcommand("family", "print the n-th pretzel family link");
    family->add_option("--n", n, "family index")->required();

    CLI::App* mutants = app.add_subcommand("mutants", "count mutant classes of the n-th family link");
    mutants->add_option("--n", n, "family index")->required();
    mutants->add_flag("--enumerate", do_enumerate, "enumerate classes and print canonical keys");

    CLI::App* classify = app.add_subcommand("classify", "group Montesinos links read one per line");
    classify->add_option("--input", input_path, "input file, one link per line")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "print volume bounds for the n-th family link");
    bounds->add_option("--n", n, "family index")->required();

    CLI::App* growth = app.add_subcommand("growth", "emit growth certificates as JSON lines");
    growth->add_option("--n-min", n_min, "first family index")->required();
    growth->add_option("--n-max", n_max, "last family index")->required();

    CLI::App* census = app.add_subcommand("census", "run the census and write records to a file");
    census->add_option("--n-min", n_min, "first family index")->required();
    census->add_option("--n-max", n_max, "last family index")->required();
    census->add_option("--out", out_path, "output file")->required();
    census->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    census->add_option("--cap", cap, "largest entry count enumerated exhaustively");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        kc::working_precision();
        if (family->parsed()) return cmd_family(n);
        if (mutants->parsed()) return cmd_mutants(n, do_enumerate);
        if (classify->parsed()) return cmd_classify(input_path);
        if (bounds->parsed()) return cmd_bounds(n);
        if (growth->parsed()) return cmd_growth(n_min, n_max);
        if (census->parsed()) return cmd_census(n_min, n_max, out_path, format, cap);
    } catch (const kc::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// Command-line interface: exact curve counts from floor diagrams, the
// Kontsevich recursion and closed node formulas, diagram enumeration
// export, a verification suite, and a tropical-curve validator.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "floorcount/cache.hpp"
#include "floorcount/enumeration.hpp"
#include "floorcount/formulas.hpp"
#include "floorcount/json_io.hpp"
#include "floorcount/tropical.hpp"
#include "floorcount/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage_error = 2;
constexpr int exit_io_error = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountOptions {
    int degree = 1;
    int genus = 0;
    std::string invariant = "complex";
    std::string method = "auto";
    std::string cache_dir;
    int threads = 1;
    bool experimental = false;
};

std::string resolve_method(const CountOptions& options) {
    const int gmax = floorcount::genus_max(options.degree);
    if (options.genus > gmax) {
        // Above the genus bound every method agrees on zero; count it
        // by diagrams (the enumeration is empty).
        if (options.method == "auto" || options.method == "diagrams") return "diagrams";
    }
    if (options.invariant == "real") {
        if (options.method != "auto" && options.method != "diagrams")
            throw UsageError("the real invariant is only computed from diagrams");
        return "diagrams";
    }
    if (options.method == "kontsevich") {
        if (options.genus != 0)
            throw UsageError("the Kontsevich recursion computes genus-0 counts only");
        return "kontsevich";
    }
    if (options.method == "formula") {
        const int delta = gmax - options.genus;
        if (delta < 0 || delta > 2)
            throw UsageError(
                "closed formulas cover genus_max - 2 <= genus <= genus_max only");
        if ((delta == 1 && options.degree < 3) || (delta == 2 && options.degree < 4))
            throw UsageError("closed formula not applicable at this degree");
        return "formula";
    }
    if (options.method == "diagrams") return "diagrams";
    // auto: prefer the cheap exact routes.
    if (options.genus == 0) return "kontsevich";
    const int delta = gmax - options.genus;
    if (delta == 0) return "formula";
    if (delta == 1 && options.degree >= 3) return "formula";
    if (delta == 2 && options.degree >= 4) return "formula";
    return "diagrams";
}

int run_count(const CountOptions& options) {
    if (options.degree < 1) throw UsageError("--degree must be at least 1");
    if (options.genus < 0) throw UsageError("--genus must be nonnegative");
    if (options.invariant != "complex" && options.invariant != "real")
        throw UsageError("--invariant must be complex or real");
    if (options.invariant == "real" && options.genus != 0 && !options.experimental)
        throw UsageError(
            "the real invariant is defined for genus 0; pass --experimental to "
            "sum real multiplicities at higher genus");

    const std::string method = resolve_method(options);
    floorcount::CacheKey key{options.degree, options.genus, options.invariant, method};

    floorcount::ResultCache cache;
    if (!options.cache_dir.empty())
        cache = floorcount::ResultCache(options.cache_dir);
    if (cache.enabled()) {
        if (const auto cached = cache.load(key)) {
            std::cout << cached->str() << '\n';
            return exit_ok;
        }
    }

    floorcount::BigInt value;
    if (method == "kontsevich") {
        value = floorcount::kontsevich(options.degree);
    } else if (method == "formula") {
        value = floorcount::closed_count(options.degree,
                                         floorcount::genus_max(options.degree) -
                                             options.genus);
    } else if (options.invariant == "complex") {
        value = floorcount::count_complex(options.degree, options.genus,
                                          options.threads)
                    .value;
    } else {
        value = floorcount::count_real(options.degree, options.genus, options.threads)
                    .value;
    }

    if (cache.enabled()) cache.store(key, value);
    std::cout << value.str() << '\n';
    return exit_ok;
}

struct EnumerateOptions {
    int degree = 1;
    int genus = 0;
    std::string format = "json";
    bool with_markings = false;
    int threads = 1;
};

int run_enumerate(const EnumerateOptions& options) {
    if (options.degree < 1) throw UsageError("--degree must be at least 1");
    if (options.genus < 0) throw UsageError("--genus must be nonnegative");
    if (options.format != "json" && options.format != "dot")
        throw UsageError("--format must be json or dot");

    const auto classes = floorcount::enumerate_diagram_classes(
        options.degree, options.genus, options.threads);
    int index = 0;
    for (const floorcount::DiagramClass& entry : classes) {
        ++index;
        if (options.format == "json") {
            const floorcount::Json diagram = floorcount::diagram_to_json(entry.diagram);
            if (options.with_markings) {
                const floorcount::Json record = {
                    {"diagram", diagram},
                    {"markings", entry.markings.str()},
                    {"mu_complex", entry.mu_complex.str()},
                    {"mu_real", entry.mu_real}};
                std::cout << record.dump() << '\n';
            } else {
                std::cout << diagram.dump() << '\n';
            }
        } else {
            std::string label;
            if (options.with_markings)
                label = "markings=" + entry.markings.str() +
                        ", mu_C=" + entry.mu_complex.str() +
                        ", mu_R=" + std::to_string(entry.mu_real);
            std::cout << floorcount::diagram_to_dot(
                entry.diagram, "d" + std::to_string(index), label);
        }
        if (!std::cout)
            throw IoError("failed writing to standard output");
    }
    return exit_ok;
}

int run_verify(int max_degree, int threads) {
    if (max_degree < 1) throw UsageError("--max-degree must be at least 1");
    const floorcount::VerifySuiteResult result =
        floorcount::run_verify_suite(max_degree, threads);
    floorcount::print_verify_table(result, std::cout);
    return result.all_pass() ? exit_ok : exit_verification_failure;
}

floorcount::TropicalCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    floorcount::Json content;
    try {
        content = floorcount::Json::parse(in);
    } catch (const std::exception& error) {
        throw IoError(path + ": " + error.what());
    }
    try {
        return floorcount::curve_from_json(content);
    } catch (const std::exception& error) {
        throw IoError(path + ": " + error.what());
    }
}

int run_tropical(const std::string& action, const std::string& path) {
    const floorcount::TropicalCurve curve = load_curve(path);
    if (action == "validate") {
        const floorcount::ValidationReport report = floorcount::check_balancing(curve);
        if (!report.valid()) {
            std::cout << "fail\n";
            for (const floorcount::Violation& violation : report.violations)
                std::cout << violation.invariant << ": " << violation.detail << '\n';
            return exit_verification_failure;
        }
        std::cout << "pass\n";
        try {
            std::cout << "degree " << floorcount::degree(curve) << '\n';
        } catch (const std::exception& error) {
            std::cout << "degree undefined: " << error.what() << '\n';
        }
        std::cout << "nodal " << (floorcount::check_nodal(curve) ? "yes" : "no")
                  << '\n';
        return exit_ok;
    }
    try {
        if (action == "multiplicity") {
            std::cout << "complex " << floorcount::curve_complex_multiplicity(curve).str()
                      << '\n';
            std::cout << "real " << floorcount::curve_real_multiplicity(curve) << '\n';
            return exit_ok;
        }
        // floors
        const floorcount::FloorDecomposition decomposition =
            floorcount::floor_decomposition(curve);
        std::cout << "floors " << decomposition.floors.size() << '\n';
        std::cout << "elevators " << decomposition.elevators.size() << '\n';
        std::cout << floorcount::diagram_to_json(decomposition.induced).dump() << '\n';
        return exit_ok;
    } catch (const std::invalid_argument& error) {
        throw SemanticError(error.what());
    } catch (const std::domain_error& error) {
        throw SemanticError(error.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plane-curve counts from floor diagrams"};
    app.require_subcommand(1);

    CountOptions count_options;
    CLI::App* count = app.add_subcommand("count", "Print one exact curve count");
    count->add_option("--degree", count_options.degree, "Curve degree d >= 1")
        ->required();
    count->add_option("--genus", count_options.genus, "Curve genus g >= 0");
    count->add_option("--invariant", count_options.invariant,
                      "complex (default) or real");
    count->add_option("--method", count_options.method,
                      "diagrams, kontsevich, formula or auto (default)");
    count->add_option("--cache-dir", count_options.cache_dir,
                      "Directory for the persistent result cache")
        ->envname("FLOORCOUNT_CACHE");
    count->add_option("--threads", count_options.threads, "Worker threads");
    count->add_flag("--experimental", count_options.experimental,
                    "Allow real sums at genus >= 1 (no invariance guarantee)");

    EnumerateOptions enumerate_options;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Stream all diagrams of (degree, genus)");
    enumerate->add_option("--degree", enumerate_options.degree, "Curve degree d >= 1")
        ->required();
    enumerate->add_option("--genus", enumerate_options.genus, "Curve genus g >= 0");
    enumerate->add_option("--format", enumerate_options.format, "json (default) or dot");
    enumerate->add_flag("--with-markings", enumerate_options.with_markings,
                        "Attach marking counts and multiplicities");
    enumerate->add_option("--threads", enumerate_options.threads, "Worker threads");

    int verify_max_degree = 0;
    int verify_threads = 1;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--max-degree", verify_max_degree, "Largest degree to check")
        ->required();
    verify->add_option("--threads", verify_threads, "Worker threads");

    std::string tropical_file;
    CLI::App* tropical =
        app.add_subcommand("tropical", "Validate and decompose tropical curves");
    tropical->require_subcommand(1);
    CLI::App* trop_validate =
        tropical->add_subcommand("validate", "Structural and balancing checks");
    CLI::App* trop_multiplicity =
        tropical->add_subcommand("multiplicity", "Complex and real multiplicities");
    CLI::App* trop_floors =
        tropical->add_subcommand("floors", "Floor decomposition and induced diagram");
    for (CLI::App* sub : {trop_validate, trop_multiplicity, trop_floors})
        sub->add_option("file", tropical_file, "Curve JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);
        app.exit(error);
        return exit_usage_error;
    }

    try {
        if (*count) return run_count(count_options);
        if (*enumerate) return run_enumerate(enumerate_options);
        if (*verify) return run_verify(verify_max_degree, verify_threads);
        if (*trop_validate) return run_tropical("validate", tropical_file);
        if (*trop_multiplicity) return run_tropical("multiplicity", tropical_file);
        if (*trop_floors) return run_tropical("floors", tropical_file);
    } catch (const UsageError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return exit_usage_error;
    } catch (const IoError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return exit_io_error;
    } catch (const SemanticError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return exit_verification_failure;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return exit_verification_failure;
    }
    return exit_usage_error;
}

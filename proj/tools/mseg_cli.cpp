// Command-line front end. Everything goes through the C interface in mseg.h.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mseg/mseg.h"

namespace {

// Prints a report and converts its status into the process exit code.
int emit(mseg_status status, mseg_report* report, bool as_json)
{
    if (report) {
        if (as_json) {
            std::cout << mseg_report_json(report) << "\n";
        } else {
            std::cout << mseg_report_text(report);
            if (status != MSEG_OK)
                std::cerr << "error (" << mseg_status_name(status) << "): " << mseg_last_error() << "\n";
        }
        mseg_report_free(report);
    } else {
        std::cerr << "error (" << mseg_status_name(status) << "): " << mseg_last_error() << "\n";
    }
    return status == MSEG_INTERNAL_ERROR ? 4 : static_cast<int>(status);
}

// A tuple may be given as several arguments, or as one argument with ';' separators.
std::vector<std::string> split_tuple(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (const auto& arg : args) {
        std::stringstream in(arg);
        std::string piece;
        while (std::getline(in, piece, ';'))
            out.push_back(piece);
    }
    return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& xs)
{
    std::vector<const char*> out;
    for (const auto& x : xs)
        out.push_back(x.c_str());
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multisegment calculus: RSK, derivatives, Specht dictionary and property checks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the JSON report instead of text")->configurable(false);

    // rsk
    auto* rsk = app.add_subcommand("rsk", "RSK transform of a multisegment");
    std::string rsk_input;
    bool rsk_bitableau = false;
    bool rsk_width = false;
    rsk->add_option("multisegment", rsk_input, "e.g. \"[1,1]+[1,2]\", or \"0\"")->required();
    rsk->add_flag("--bitableau", rsk_bitableau, "Also print the bitableau (P, Q)");
    rsk->add_flag("--width", rsk_width, "Also print the width");
    rsk->add_flag("--json", as_json, "Print the JSON report");

    // derive
    auto* derive = app.add_subcommand("derive", "Derivatives, Gamma descriptors and Phi");
    std::vector<std::string> derive_inputs;
    int bz_radius = 0;
    int single_index = 0;
    int string_radius = 0;
    bool gamma = false;
    bool derived = false;
    bool phi = false;
    std::string transfer_file;
    // Bracketed values are CLI11 list syntax, so multisegments are taken from the
    // unparsed remainder to reach the parser verbatim.
    derive->allow_extras();
    derive->footer("Positional: one multisegment, or a tuple for --phi/--transfer (separate arguments or ';').");
    auto* opt_bz = derive->add_option("--bz", bz_radius, "BZ-derivative along (T, ..., -T)");
    auto* opt_single = derive->add_option("--single", single_index, "Single derivative at index j");
    auto* opt_string = derive->add_option("--string", string_radius, "BZ-string over (T, ..., -T)");
    auto* opt_gamma = derive->add_flag("--gamma-descriptor", gamma, "Gamma(m): ladders and shift");
    auto* opt_derived = derive->add_flag("--derived", derived, "Gamma'(m): derived ladders and shift");
    auto* opt_phi = derive->add_flag("--phi", phi, "C, C' and Phi of a tuple");
    auto* opt_transfer =
        derive->add_option("--transfer", transfer_file, "Transfer a JSON multiplicity table along a tuple");
    for (auto* a : {opt_bz, opt_single, opt_string, opt_gamma, opt_derived, opt_phi, opt_transfer})
        for (auto* b : {opt_bz, opt_single, opt_string, opt_gamma, opt_derived, opt_phi, opt_transfer})
            if (a != b)
                a->excludes(b);
    derive->add_flag("--json", as_json, "Print the JSON report");

    // specht
    auto* specht = app.add_subcommand("specht", "Multipartitions and the Specht/RSK dictionary");
    std::string charge;
    std::string parts;
    bool verify_rsk = false;
    bool pad = false;
    bool specht_derive = false;
    specht->add_option("--charge", charge, "Multicharge, e.g. 2,1,-1")->required();
    specht->add_option("--parts", parts, "Partitions, e.g. \"4,2,2,2,1|3,3,2,2|3,2\"")->required();
    specht->add_flag("--verify-rsk", verify_rsk, "Check the padded RSK identities and compute gamma");
    specht->add_flag("--pad", pad, "Print the padded multipartition");
    specht->add_flag("--derive", specht_derive, "Check the column removal identity");
    specht->add_flag("--json", as_json, "Print the JSON report");

    // tableaux
    auto* tableaux = app.add_subcommand("tableaux", "Standard tableaux and residue sequences");
    std::string shape;
    int charge_k = 0;
    tableaux->add_option("--shape", shape, "Partition, e.g. 2,1")->required();
    tableaux->add_option("--k", charge_k, "Charge used for residues");
    tableaux->add_flag("--json", as_json, "Print the JSON report");

    // check
    auto* check = app.add_subcommand("check", "Run property suites over bounded enumerations");
    std::string suite = "all";
    mseg_check_options opts;
    mseg_check_options_init(&opts);
    int support_min = 0;
    int support_max = 0;
    int max_segments = 0;
    std::string mutation;
    check->add_option("--suite", suite, "combi, rsk, specht, strings or all")
        ->check(CLI::IsMember({"combi", "rsk", "specht", "strings", "all"}));
    auto* opt_min = check->add_option("--min", support_min, "Smallest segment endpoint");
    auto* opt_max = check->add_option("--max", support_max, "Largest segment endpoint");
    auto* opt_segments = check->add_option("--max-segments", max_segments, "Segments per multisegment");
    check->add_option("--seed", opts.seed, "Seed for sampled instances");
    check->add_option("--samples", opts.samples, "Sampled triples in the combi suite");
    check->add_option("--transfer-instances", opts.transfer_instances, "Random tables in the transfer suite");
    check->add_option("--max-size", opts.max_size, "Largest |mu| in the specht suite");
    check->add_option("--max-level", opts.max_level, "Largest level in the specht suite");
    check->add_option("--inject-mutation", mutation, "Harness self-test")
        ->check(CLI::IsMember({"ell-sign"}))
        ->group("");
    check->add_flag("--json", as_json, "Print the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    mseg_report* report = nullptr;
    mseg_status status = MSEG_OK;

    if (*rsk) {
        unsigned flags = (rsk_bitableau ? MSEG_RSK_BITABLEAU : 0u) | (rsk_width ? MSEG_RSK_WIDTH : 0u);
        status = mseg_rsk_report(rsk_input.c_str(), flags, &report);
    } else if (*derive) {
        derive_inputs = derive->remaining();
        for (const auto& arg : derive_inputs)
            if (arg.size() > 1 && arg[0] == '-') {
                std::cerr << "error: unknown option " << arg << "\n";
                return 1;
            }
        if (derive_inputs.empty()) {
            std::cerr << "error: derive needs a multisegment\n";
            return 1;
        }
        auto tuple = split_tuple(derive_inputs);
        auto ptrs = c_strings(tuple);
        bool tuple_mode = phi || !transfer_file.empty();
        if (!tuple_mode && tuple.size() != 1) {
            std::cerr << "error: derive takes a single multisegment unless --phi or --transfer is given\n";
            return 1;
        }
        if (phi) {
            status = mseg_phi_report(ptrs.data(), ptrs.size(), &report);
        } else if (!transfer_file.empty()) {
            std::ifstream in(transfer_file);
            if (!in) {
                std::cerr << "error: cannot read " << transfer_file << "\n";
                return 1;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            status = mseg_transfer_report(buffer.str().c_str(), ptrs.data(), ptrs.size(), &report);
        } else if (gamma || derived) {
            status = mseg_gamma_report(ptrs[0], derived ? 1 : 0, &report);
        } else if (*opt_string) {
            status = mseg_bz_string_report(ptrs[0], string_radius, &report);
        } else if (*opt_bz) {
            status = mseg_derive_report(ptrs[0], MSEG_DERIVE_BZ, bz_radius, &report);
        } else if (*opt_single) {
            status = mseg_derive_report(ptrs[0], MSEG_DERIVE_SINGLE, single_index, &report);
        } else {
            status = mseg_derive_report(ptrs[0], MSEG_DERIVE_PLAIN, 0, &report);
        }
    } else if (*specht) {
        unsigned flags = (pad ? MSEG_SPECHT_PAD : 0u) | (verify_rsk ? MSEG_SPECHT_VERIFY_RSK : 0u) |
                         (specht_derive ? MSEG_SPECHT_DERIVE : 0u);
        status = mseg_specht_report(charge.c_str(), parts.c_str(), flags, &report);
    } else if (*tableaux) {
        status = mseg_tableaux_report(shape.c_str(), charge_k, &report);
    } else if (*check) {
        int given = static_cast<int>(opt_min->count() > 0) + static_cast<int>(opt_max->count() > 0) +
                    static_cast<int>(opt_segments->count() > 0);
        if (given > 0) {
            // Unspecified bounds fall back to the combi domain.
            opts.has_bounds = 1;
            opts.support_min = *opt_min ? support_min : -2;
            opts.support_max = *opt_max ? support_max : 2;
            opts.max_segments = *opt_segments ? max_segments : 3;
        }
        opts.mutate_ell_sign = mutation == "ell-sign";
        status = mseg_check_report(suite.c_str(), &opts, &report);
    }
    return emit(status, report, as_json);
}

#include "asmlat/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "asmlat/enumeration.hpp"
#include "asmlat/hasse.hpp"
#include "asmlat/io.hpp"
#include "asmlat/poset.hpp"
#include "asmlat/statistics.hpp"
#include "asmlat/verify.hpp"

namespace asmlat::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t guard = 0;
    int size = 0;
    std::string format;
    std::string method = "formula";
    std::string matrix_path;
    std::string perm;
    bool down = false;
    bool up = false;
    std::string output;
    bool highlight_ji = false;
    std::string stat;
    std::string bivariate;
    std::string over = "asm";
    int max = 0;
};

Asm load_matrix(const Options& o, std::istream& in) {
    if (!o.perm.empty()) {
        return from_permutation(parse_permutation(o.perm));
    }
    if (o.matrix_path == "-") {
        return read_matrix(in);
    }
    std::ifstream file(o.matrix_path);
    if (!file) {
        throw AsmError(ErrorKind::ParseError, "cannot open '" + o.matrix_path + "'");
    }
    return read_matrix(file);
}

void cmd_enumerate(const Options& o, std::ostream& out) {
    const auto all = enumerate_asms(o.size, o.guard);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : all) {
            arr.push_back(to_json(a));
        }
        out << arr.dump() << '\n';
        return;
    }
    for (const auto& a : all) {
        out << flat_string(a) << '\n';
    }
}

void cmd_count(const Options& o, std::ostream& out) {
    if (o.method == "enumerate") {
        out << count_by_enumeration(o.size, o.guard) << '\n';
    } else {
        out << count_formula(o.size).get_str() << '\n';
    }
}

void cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
    const Asm a = load_matrix(o, in);
    const auto s = stat_record(a);
    if (o.format == "json") {
        out << to_json(s).dump() << '\n';
        return;
    }
    out << "I: " << s.inv << '\n'
        << "I*: " << s.dual_inv << '\n'
        << "N: " << s.minus << '\n'
        << "H: " << s.weak.to_string() << '\n'
        << "beta: " << s.beta << '\n';
}

void cmd_covers(const Options& o, std::istream& in, std::ostream& out) {
    if (o.up && o.down) {
        throw UsageError("--up and --down are exclusive");
    }
    const Asm a = load_matrix(o, in);
    const auto edges = o.down ? covers_down(a) : covers_up(a);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : edges) {
            auto j = to_json(e);
            j["other"] = to_json(o.down ? e.lower : e.upper);
            arr.push_back(j);
        }
        out << arr.dump() << '\n';
        return;
    }
    for (const auto& e : edges) {
        out << "r=" << e.r << " s=" << e.s << " type=" << e.type << " dI=" << e.deltas.dI
            << " dN2x=" << e.deltas.dN2x << " dH2x=" << e.deltas.dH2x << " "
            << (o.down ? "from " : "to ") << node_label(o.down ? e.lower : e.upper) << '\n';
    }
}

void cmd_hasse(const Options& o, std::ostream& out) {
    const auto g = build_hasse(o.size, o.guard);
    if (o.output == "json") {
        out << to_json(g).dump() << '\n';
    } else {
        out << to_dot(g, o.highlight_ji);
    }
}

void cmd_genfun(const Options& o, std::ostream& out) {
    const bool json = o.format == "json";
    if (!o.bivariate.empty()) {
        BivariatePair pair;
        if (o.bivariate == "I:beta") {
            pair = o.over == "perm" ? BivariatePair::PermIBeta : BivariatePair::AsmIBeta;
        } else if (o.over == "asm") {
            pair = BivariatePair::AsmHBeta;
        } else {
            throw UsageError("--bivariate H:beta is defined over ASMs only");
        }
        const auto p = bivariate_genfun(o.size, pair, o.guard);
        out << (json ? to_json(p).dump() : p.to_string()) << '\n';
        return;
    }
    if (o.stat.empty()) {
        throw UsageError("genfun needs --stat or --bivariate");
    }
    const Stat stat = o.stat == "I" ? Stat::I : o.stat == "H" ? Stat::H : Stat::Beta;
    const Domain domain = o.over == "perm" ? Domain::Permutations : Domain::Asms;
    const auto p = genfun_stat(o.size, stat, domain, o.guard);
    out << (json ? to_json(p).dump() : p.to_string()) << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = verify(o.max, o.guard);
    out << report.to_string();
    return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Alternating sign matrices: lattice order, covers and inversion statistics", "asmlat"};
    app.require_subcommand(1, 1);
    std::optional<std::uint64_t> guard_flag;
    app.add_option("--guard", guard_flag, "Maximum number of ASMs to enumerate (default: $ASMLAT_GUARD or 10^7)")
        ->check(CLI::PositiveNumber);

    auto add_size = [&](CLI::App* sub) {
        sub->add_option("--size,-n", o.size, "Matrix size")->required()->check(CLI::Range(1, 64));
    };
    auto add_matrix_source = [&](CLI::App* sub) {
        auto* m = sub->add_option("--matrix", o.matrix_path, "Matrix file, or - for stdin");
        auto* p = sub->add_option("--perm", o.perm, "Permutation shorthand, e.g. 3412 or perm:3,4,1,2");
        m->excludes(p);
        p->excludes(m);
    };

    auto* enumerate = app.add_subcommand("enumerate", "List every ASM of a size");
    add_size(enumerate);
    o.format = "lines";
    enumerate->add_option("--format", o.format)->check(CLI::IsMember({"lines", "json"}));

    auto* count = app.add_subcommand("count", "Number of ASMs of a size");
    add_size(count);
    count->add_option("--method", o.method)->check(CLI::IsMember({"formula", "enumerate"}));

    auto* stats = app.add_subcommand("stats", "I, I*, N, H and beta of one matrix");
    add_matrix_source(stats);
    stats->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* covers = app.add_subcommand("covers", "Covering relations above or below one matrix");
    add_matrix_source(covers);
    covers->add_flag("--up", o.up, "Covers above (default)");
    covers->add_flag("--down", o.down, "Covers below");
    covers->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the lattice");
    add_size(hasse);
    hasse->add_option("--output", o.output)->required()->check(CLI::IsMember({"dot", "json"}));
    hasse->add_flag("--highlight-ji", o.highlight_ji, "Fill join-irreducible nodes");

    auto* genfun = app.add_subcommand("genfun", "Generating polynomial of a statistic by enumeration");
    add_size(genfun);
    genfun->add_option("--stat", o.stat)->check(CLI::IsMember({"I", "H", "beta"}));
    genfun->add_option("--bivariate", o.bivariate)->check(CLI::IsMember({"I:beta", "H:beta"}));
    genfun->add_option("--over", o.over)->check(CLI::IsMember({"asm", "perm"}));
    genfun->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check every lattice and statistic property up to a size");
    verify_cmd->add_option("--max", o.max)->required()->check(CLI::Range(1, 64));

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    o.guard = guard_flag.value_or(guard_from_environment());
    if (o.format.empty() || (o.format == "lines" && !enumerate->parsed())) {
        o.format = "text";
    }

    try {
        if ((stats->parsed() || covers->parsed()) && o.matrix_path.empty() && o.perm.empty()) {
            throw UsageError("one of --matrix or --perm is required");
        }
        if (enumerate->parsed()) {
            cmd_enumerate(o, out);
        } else if (count->parsed()) {
            cmd_count(o, out);
        } else if (stats->parsed()) {
            cmd_stats(o, in, out);
        } else if (covers->parsed()) {
            cmd_covers(o, in, out);
        } else if (hasse->parsed()) {
            cmd_hasse(o, out);
        } else if (genfun->parsed()) {
            cmd_genfun(o, out);
        } else if (verify_cmd->parsed()) {
            return cmd_verify(o, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const AsmError& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::TooLarge ? kGuardExceeded : kDomainError;
    }
    return kOk;
}

}  // namespace asmlat::cli

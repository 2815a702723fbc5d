// Command line front end: enumeration, the merge/split bijection,
// verification suites, transition measures, word moments, and the
// convergence experiment. Exit codes: 0 success, 1 verification failure,
// 2 usage or input errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freejm/character.hpp"
#include "freejm/convergence.hpp"
#include "freejm/jm_tuple.hpp"
#include "freejm/moment_cumulant.hpp"
#include "freejm/phi.hpp"
#include "freejm/rational.hpp"
#include "freejm/set_partition.hpp"
#include "freejm/transition.hpp"
#include "freejm/verify.hpp"
#include "freejm/young_diagram.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_size_range(const std::string& text) {
    std::vector<int> out;
    const size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const int from = std::stoi(text.substr(0, dots));
        const int to = std::stoi(text.substr(dots + 2));
        for (int k = from; k <= to; ++k) out.push_back(k);
        return out;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::vector<freejm::Coloring> parse_word_list(const std::string& text) {
    std::vector<freejm::Coloring> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(freejm::Coloring::parse(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

json partition_json(const freejm::SetPartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return blocks;
}

json sequence_json(const std::vector<freejm::Rational>& entries) {
    json out = json::array();
    for (const auto& q : entries) out.push_back(freejm::rational_str(q));
    return out;
}

int run_enumerate(int m, const std::string& family_token, const std::string& color,
                  const std::string& format) {
    const auto family = freejm::family_from_token(family_token);
    if (!family) {
        std::cerr << "unknown family '" << family_token << "'\n";
        return 2;
    }
    std::optional<freejm::Coloring> coloring;
    if (!color.empty()) coloring = freejm::Coloring::parse(color);
    if (format == "json") {
        json out = json::array();
        freejm::for_each_partition(m, *family, coloring,
                                   [&](const freejm::SetPartition& p) { out.push_back(partition_json(p)); });
        std::cout << out.dump() << "\n";
    } else {
        long long count = 0;
        freejm::for_each_partition(m, *family, coloring, [&](const freejm::SetPartition& p) {
            std::cout << p.str() << "\n";
            ++count;
        });
        std::cout << "# " << count << " partitions\n";
    }
    return 0;
}

int run_bijection(int m, const std::string& format) {
    const auto members = freejm::enumerate_partitions(m, freejm::Family::NC1Lt2);
    if (format == "json") {
        json out = json::array();
        for (const auto& p : members)
            out.push_back({partition_json(p), partition_json(freejm::merge_inner_singletons(p))});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& p : members)
            std::cout << p.str() << " -> " << freejm::merge_inner_singletons(p).str() << "\n";
        std::cout << "# " << members.size() << " pairs\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_m, int max_n, int fixed_n, int count, int order,
               unsigned seed, bool search) {
    namespace v = freejm::verify;
    auto pick = [](int value, int fallback) { return value >= 0 ? value : fallback; };
    v::Result result;
    if (suite == "f-bijection") {
        result = v::f_bijection(pick(max_m, 10));
    } else if (suite == "lemma1") {
        result = v::tuple_conjugacy(pick(max_m, 4), pick(max_n, 3), search);
    } else if (suite == "lemma3") {
        result = v::unrepeated_factor_length(pick(max_m, 6), pick(max_n, 4));
    } else if (suite == "lemma4") {
        result = v::pair_partition_identity(pick(max_m, 8));
    } else if (suite == "lemma5") {
        result = v::length_criterion_suite(pick(max_m, 6), pick(fixed_n, 4));
    } else if (suite == "lemma6") {
        result = v::cycle_reading(pick(max_m, 8));
    } else if (suite == "lemma7") {
        result = v::tuple_count_formula(pick(max_m, 4), pick(max_n, 5));
    } else if (suite == "grouping") {
        result = v::grouping(pick(max_m, 5));
    } else if (suite == "mc-roundtrip") {
        result = v::mc_roundtrip(pick(count, 100), pick(order, 8), seed);
    } else if (suite == "def4-equiv") {
        result = v::colored_moment_identities(pick(order, 6), seed);
    } else {
        std::cerr << "unknown verify suite '" << suite << "'\n";
        return 2;
    }
    for (const auto& line : result.lines) std::cout << line << "\n";
    if (!result.ok) {
        std::cout << "FAIL: " << result.counterexample << "\n";
        return 1;
    }
    std::cout << "OK\n";
    return 0;
}

int run_transition(const std::string& diagram_text, int kmax, bool cumulants,
                   const std::string& format) {
    const freejm::YoungDiagram diagram =
        diagram_text.empty() ? freejm::YoungDiagram() : freejm::YoungDiagram::parse(diagram_text);
    std::vector<freejm::Rational> entries;
    if (cumulants)
        entries = freejm::transition_cumulants(diagram, kmax).entries();
    else
        entries = freejm::transition_moments(diagram, kmax).entries();
    if (format == "json") {
        std::cout << sequence_json(entries).dump() << "\n";
    } else {
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << freejm::rational_str(entries[i]);
        }
        std::cout << "\n";
    }
    return 0;
}

int run_phi(int n, const std::string& l1, const std::string& l2, const std::string& word_text,
            const std::string& method, int decimal_digits) {
    const freejm::PhiContext ctx(n, freejm::YoungDiagram::parse(l1),
                                 freejm::YoungDiagram::parse(l2));
    const freejm::Coloring word = freejm::Coloring::parse(word_text);
    const freejm::ScaledValue value = (method == "naive") ? freejm::phi_word_naive(ctx, word)
                                                          : freejm::phi_word_grouped(ctx, word);
    if (decimal_digits >= 0)
        std::cout << value.decimal(decimal_digits) << "\n";
    else
        std::cout << value.str() << "\n";
    return 0;
}

int run_converge(const std::string& family_token, const std::string& range_text,
                 const std::string& words_text, int decimal_digits) {
    freejm::DiagramFamily family;
    if (family_token == "square")
        family = freejm::DiagramFamily::Square;
    else if (family_token == "staircase")
        family = freejm::DiagramFamily::Staircase;
    else {
        std::cerr << "unknown diagram family '" << family_token << "'\n";
        return 2;
    }
    const auto rows = freejm::convergence_table(family, parse_word_list(words_text),
                                                parse_size_range(range_text));
    std::cout << freejm::convergence_csv(rows, decimal_digits);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of colored non-crossing partitions and star-transposition moments"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "list a partition family");
    int en_m = 0;
    std::string en_family = "all", en_color, en_format = "csv";
    enumerate->add_option("--m", en_m, "ground set size")->required();
    enumerate->add_option("--family", en_family, "all|nc|nc2|nc12|nc1lt2|ncge2");
    enumerate->add_option("--color", en_color, "word over {X,Y}; keep only partitions respecting it");
    enumerate->add_option("--format", en_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* bijection = app.add_subcommand("bijection", "list the merge/split bijection pairs");
    int bi_m = 0;
    std::string bi_format = "csv";
    bijection->add_option("--m", bi_m, "ground set size")->required();
    bijection->add_option("--format", bi_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int v_max_m = -1, v_max_n = -1, v_n = -1, v_count = -1, v_order = -1;
    unsigned v_seed = 20240901;
    bool v_search = false;
    verify->add_option("suite", suite,
                       "lemma1|lemma3|lemma4|lemma5|lemma6|lemma7|grouping|f-bijection|"
                       "mc-roundtrip|def4-equiv")
        ->required();
    verify->add_option("--max-m", v_max_m, "bound on the word/ground size");
    verify->add_option("--max-n", v_max_n, "bound on the half size n");
    verify->add_option("--n", v_n, "fixed half size (lemma5)");
    verify->add_option("--count", v_count, "random trials (mc-roundtrip)");
    verify->add_option("--order", v_order, "truncation order (mc-roundtrip, def4-equiv)");
    verify->add_option("--seed", v_seed, "random seed");
    verify->add_flag("--search", v_search, "also search conjugators exhaustively (lemma1)");

    auto* transition = app.add_subcommand("transition", "transition measure of a diagram");
    std::string tr_diagram;
    int tr_kmax = 4;
    bool tr_cumulants = false;
    std::string tr_format = "json";
    transition->add_option("--diagram", tr_diagram, "row lengths, e.g. 3,2,1 (\"\" is the empty diagram)")
        ->required();
    transition->add_option("--kmax", tr_kmax, "truncation order")->required();
    transition->add_flag("--cumulants", tr_cumulants, "emit free cumulants instead of moments");
    transition->add_option("--format", tr_format, "json|csv")->check(CLI::IsMember({"csv", "json"}));

    auto* phi = app.add_subcommand("phi", "mixed word moment at finite n");
    int ph_n = 1, ph_decimal = -1;
    std::string ph_l1, ph_l2, ph_word, ph_method = "grouped";
    phi->add_option("--n", ph_n, "half size")->required();
    phi->add_option("--lambda1", ph_l1, "first diagram rows")->required();
    phi->add_option("--lambda2", ph_l2, "second diagram rows")->required();
    phi->add_option("--word", ph_word, "word over {X,Y}")->required();
    phi->add_option("--method", ph_method, "grouped|naive")
        ->check(CLI::IsMember({"grouped", "naive"}));
    phi->add_option("--decimal", ph_decimal, "print a decimal with this many places");

    auto* converge = app.add_subcommand("converge", "finite-size convergence experiment");
    std::string cv_family = "square", cv_range, cv_words;
    int cv_decimal = -1;
    converge->add_option("--family", cv_family, "square|staircase");
    converge->add_option("--k", cv_range, "size parameters, e.g. 1..4 or 2,3")->required();
    converge->add_option("--words", cv_words, "comma separated words over {X,Y}")->required();
    converge->add_option("--decimal", cv_decimal, "print decimals with this many places");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(en_m, en_family, en_color, en_format);
        if (bijection->parsed()) return run_bijection(bi_m, bi_format);
        if (verify->parsed())
            return run_verify(suite, v_max_m, v_max_n, v_n, v_count, v_order, v_seed, v_search);
        if (transition->parsed()) return run_transition(tr_diagram, tr_kmax, tr_cumulants, tr_format);
        if (phi->parsed()) return run_phi(ph_n, ph_l1, ph_l2, ph_word, ph_method, ph_decimal);
        if (converge->parsed()) return run_converge(cv_family, cv_range, cv_words, cv_decimal);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "qborel/errors.hpp"
#include "qborel/serialize.hpp"
#include "qborel/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qborel;

namespace {

struct RunConfig {
    std::string type;
    std::string cartan_file;
    std::string word = "w0";
    int height = 0;
    std::string format = "json";
    std::string suite = "all";
    int i = 0;
    int j = 0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

bool is_usage_error(const Error& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
           dynamic_cast<const InvalidCartan*>(&e) || dynamic_cast<const NotReduced*>(&e) ||
           dynamic_cast<const BadIndex*>(&e);
}

RootSystem load_roots(const RunConfig& c) {
    if (!c.cartan_file.empty()) {
        std::ifstream in(c.cartan_file);
        if (!in) throw UsageError("cannot read " + c.cartan_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return RootSystem::from_cartan(parse_cartan_json(ss.str()), c.cartan_file);
    }
    if (c.type.empty()) throw UsageError("one of --type or --cartan-file is required");
    return RootSystem::from_type(c.type);
}

// The element and the word it is presented by.
std::pair<WeylElt, Word> load_word(const RootSystem& rs, const RunConfig& c) {
    if (c.word == "w0") {
        const WeylElt w0 = longest_element(rs);
        return {w0, reduced_word(rs, w0)};
    }
    const Word word = parse_word(c.word);
    for (int a : word)
        if (a >= rs.rank()) throw BadIndex("letter " + std::to_string(a + 1) + " exceeds the rank");
    if (!is_reduced(rs, word)) throw NotReduced("word not reduced");
    return {WeylElt::from_word(rs, word), word};
}

void emit(const RunConfig& c, const json& j, const std::string& tsv) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << tsv;
}

std::string roots_tsv(const std::vector<QVec>& v) {
    std::string s;
    for (const auto& r : v) s += (s.empty() ? "" : " ") + to_string(r);
    return s.empty() ? "-" : s;
}

int cmd_roots(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    std::ostringstream os;
    os << "# type " << rs.label() << "  rank " << rs.rank() << "\nroot\theight\n";
    for (const auto& r : rs.positive_roots()) os << to_string(r) << '\t' << rs.height(r) << '\n';
    emit(c, root_system_to_json(rs), os.str());
    return 0;
}

int cmd_weyl(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    const auto [w, word] = load_word(rs, c);
    const auto inv = inversion_set(rs, w);
    const auto words = all_reduced_words(rs, w);
    json j;
    j["word"] = word_to_json(word);
    j["reduced_word"] = word_to_json(reduced_word(rs, w));
    j["length"] = w.length();
    j["roots_of_word"] = roots_of_word(rs, word);
    j["inversion_set"] = inv;
    j["reduced_word_count"] = words.size();
    std::ostringstream os;
    os << "word\t" << word_to_string(word) << "\nreduced_word\t" << word_to_string(reduced_word(rs, w)) << "\nlength\t"
       << w.length() << "\nroots_of_word\t" << roots_tsv(roots_of_word(rs, word)) << "\ninversion_set\t"
       << roots_tsv(inv) << "\nreduced_word_count\t" << words.size() << "\n";
    emit(c, j, os.str());
    return 0;
}

int cmd_strata(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    const auto [w, word] = load_word(rs, c);
    json rows = json::array();
    std::ostringstream os;
    os << "y_word\ttheta_indices\ttheta_roots\tdim\n";
    for (const auto& s : enumerate_strata(rs, w, word)) {
        json idx = json::array();
        std::string ids;
        for (int k : s.theta.indices) {
            idx.push_back(k + 1);
            ids += (ids.empty() ? "" : ",") + std::to_string(k + 1);
        }
        rows.push_back(json{{"y_word", word_to_json(reduced_word(rs, s.y))},
                            {"theta_indices", idx},
                            {"theta_roots", s.theta.roots},
                            {"dim", s.dim}});
        os << word_to_string(reduced_word(rs, s.y)) << '\t' << (ids.empty() ? "-" : ids) << '\t'
           << roots_tsv(s.theta.roots) << '\t' << s.dim << '\n';
    }
    emit(c, json{{"type", rs.label()}, {"word", word_to_json(word)}, {"strata", rows}}, os.str());
    return 0;
}

int cmd_classify(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    const auto [w, word] = load_word(rs, c);
    const auto rep = classify(rs, w, word);
    emit(c, report_to_json(rep), report_to_tsv(rep));
    return 0;
}

int cmd_ls(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    const auto [w, word] = load_word(rs, c);
    const int t = static_cast<int>(word.size());
    if (c.i < 1 || c.j > t || c.i >= c.j) throw BadIndex("need 1 <= i < j <= " + std::to_string(t));
    UAlgebra alg(rs, c.height);
    PbwBasis pbw(alg, word);
    const PBWVec& v = pbw.ls_relation(c.i - 1, c.j - 1);
    emit(c, pbw_to_json(v), pbw_to_string(v) + "\n");
    return 0;
}

int cmd_verify(const RunConfig& c) {
    const RootSystem rs = load_roots(c);
    std::vector<std::string> suites;
    if (c.suite == "all")
        suites = suite_names();
    else
        suites.push_back(c.suite);
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw UsageError("unknown suite '" + s + "'");
    SuiteOptions opt;
    opt.height = c.height;
    bool all = true;
    json out = json::array();
    std::ostringstream os;
    for (const auto& s : suites)
        for (const auto& r : run_suite(s, rs, opt)) {
            all = all && r.pass;
            out.push_back(json{{"suite", s}, {"check", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
            os << (r.pass ? "PASS" : "FAIL") << '\t' << s << '\t' << r.name << '\t' << r.cases;
            if (!r.detail.empty()) os << '\t' << r.detail;
            os << '\n';
        }
    emit(c, json{{"type", rs.label()}, {"pass", all}, {"checks", out}}, os.str());
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of U+[w] and right coideal subalgebras of the quantum Borel"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* sub, bool with_word) {
        auto* type = sub->add_option("--type", c.type, "Cartan type, e.g. A2, B3, G2, A1xA1");
        auto* file = sub->add_option("--cartan-file", c.cartan_file, "JSON file holding a Cartan matrix");
        type->excludes(file);
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--height", c.height, "height bound of the normal-form engine (0: default)")
            ->check(CLI::NonNegativeNumber);
        if (with_word) sub->add_option("--word", c.word, "reduced word like 1,2,1 (1-based), 'e' or 'w0'");
    };
    std::map<std::string, int (*)(const RunConfig&)> handlers{{"roots", cmd_roots},     {"weyl", cmd_weyl},
                                                              {"strata", cmd_strata},   {"classify", cmd_classify},
                                                              {"ls", cmd_ls},           {"verify", cmd_verify}};
    common(app.add_subcommand("roots", "positive roots and the invariant form"), false);
    common(app.add_subcommand("weyl", "length, inversion set and reduced words of an element"), true);
    common(app.add_subcommand("strata", "T^w with the elements w_Theta and stratum dimensions"), true);
    common(app.add_subcommand("classify", "strata table with maximal lattices and Bruhat relations"), true);
    auto* ls = app.add_subcommand("ls", "PBW expansion of an LS relation");
    common(ls, true);
    ls->add_option("--i", c.i, "first root position (1-based)")->required();
    ls->add_option("--j", c.j, "second root position, i < j")->required();
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    common(verify, false);
    verify->add_option("--suite", c.suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(name)(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "qborel/serialize.hpp"

#include "qborel/errors.hpp"

#include <sstream>

namespace qborel {

namespace {

std::string letters_to_string(const Letters& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(static_cast<int>(w[k]) + 1);
    }
    return s;
}

std::string roots_to_string(const std::vector<QVec>& roots) {
    std::string s;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k) s += ' ';
        s += to_string(roots[k]);
    }
    return s.empty() ? "-" : s;
}

} // namespace

json to_json(const QVec& v) { return json(v); }

json word_to_json(const Word& w) {
    json a = json::array();
    for (int x : w) a.push_back(x + 1);
    return a;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w[k] + 1);
    }
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty() || text == "e") return w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad word entry '" + item + "'");
        }
        if (used != item.size() || v < 1) throw ParseError("bad word entry '" + item + "'");
        w.push_back(v - 1);
    }
    return w;
}

json root_system_to_json(const RootSystem& rs) {
    json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["symmetrizers"] = rs.symmetrizers();
    j["gram"] = rs.gram();
    json roots = json::array();
    for (const auto& r : rs.positive_roots()) roots.push_back(json{{"root", r}, {"height", rs.height(r)}});
    j["positive_roots"] = roots;
    return j;
}

json report_to_json(const ClassificationReport& r) {
    json j;
    j["type"] = r.type;
    j["word"] = word_to_json(r.word);
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr;
        jr["y_word"] = word_to_json(row.y_word);
        json idx = json::array();
        for (int k : row.theta_indices) idx.push_back(k + 1);
        jr["theta_indices"] = idx;
        jr["theta_roots"] = row.theta_roots;
        jr["dim"] = row.dim;
        jr["Lmax_basis"] = row.lmax_basis;
        rows.push_back(jr);
    }
    j["rows"] = rows;
    json br = json::array();
    for (auto [a, b] : r.bruhat) br.push_back(json::array({a + 1, b + 1}));
    j["bruhat_less"] = br;
    j["totals"] = json{{"Tw", r.tw_count}, {"Ww", r.ww_count}};
    return j;
}

std::string report_to_tsv(const ClassificationReport& r) {
    std::ostringstream os;
    os << "# type " << r.type << "  word " << word_to_string(r.word) << "\n";
    os << "row\ty_word\ttheta\tdim\tLmax_basis\n";
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const auto& row = r.rows[k];
        os << k + 1 << '\t' << word_to_string(row.y_word) << '\t' << roots_to_string(row.theta_roots) << '\t'
           << row.dim << '\t' << roots_to_string(row.lmax_basis) << '\n';
    }
    os << "# bruhat (row < row):";
    for (auto [a, b] : r.bruhat) os << ' ' << a + 1 << '<' << b + 1;
    os << "\n# |T^w| = " << r.tw_count << "  |W^w| = " << r.ww_count << "\n";
    return os.str();
}

json pbw_to_json(const PBWVec& v) {
    json terms = json::array();
    for (const auto& [a, c] : v.terms) terms.push_back(json{{"exponents", a}, {"coeff", c.str()}});
    return json{{"word", word_to_json(v.word)}, {"terms", terms}};
}

std::string pbw_to_string(const PBWVec& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [a, c] : v.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ") * E[";
        for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
        s += "]";
    }
    return s;
}

json free_to_json(const FreeElt& x) {
    json a = json::array();
    for (const auto& [w, c] : x) a.push_back(json{{"eword", letters_to_string(w)}, {"coeff", c.str()}});
    return a;
}

json uelt_to_json(const UElt& x) {
    json a = json::array();
    for (const auto& [k, c] : x)
        a.push_back(json{{"fword", letters_to_string(k.f)}, {"kexp", k.k}, {"eword", letters_to_string(k.e)}, {"coeff", c.str()}});
    return a;
}

IntMatrix parse_cartan_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("cartan file: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw ParseError("cartan file must hold a square integer array");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j.size()) throw ParseError("cartan matrix must be square");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ParseError("cartan entries must be integers");
            r.push_back(x.get<int>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace qborel

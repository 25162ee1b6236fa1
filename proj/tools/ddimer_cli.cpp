#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ddimer/enumerate.hpp"
#include "ddimer/instances.hpp"
#include "ddimer/kasteleyn.hpp"
#include "ddimer/qdd.hpp"
#include "ddimer/tripartite.hpp"
#include "ddimer/verify.hpp"
#include "json.hpp"

using namespace ddimer;

namespace {

EmbeddedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

RgbSplit parse_split(const std::string& text, int two_n) {
    RgbSplit s;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> s.r >> c1 >> s.g >> c2 >> s.b) || c1 != ',' || c2 != ',')
        throw Error("bad --split, expected r,g,b");
    if (s.total() != two_n) throw Error("--split does not sum to the node count");
    return s;
}

int cmd_zd(const std::string& file, bool enumerate, long long cap, bool json_out) {
    EmbeddedGraph g = load_graph(file);
    Rat det = zd_det(g);
    bool small = g.num_vertices() <= 18;
    bool routes_agree = true;
    Rat enumerated;
    if (enumerate || small) {
        EnumOptions opts;
        opts.cap = cap;
        enumerated = zd_enumerate(g, opts);
        routes_agree = enumerated == det;
    }
    if (json_out) {
        nlohmann::json j;
        j["zd"] = rat_str(det);
        if (enumerate || small) {
            j["enumeration"] = rat_str(enumerated);
            j["routes_agree"] = routes_agree;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rat_str(det) << "\n";
        if ((enumerate || small) && !routes_agree)
            std::cerr << "route mismatch: enumeration gives " << rat_str(enumerated) << "\n";
    }
    return routes_agree ? 0 : 1;
}

int cmd_pr(const std::string& file, const std::string& split_text, bool json_out) {
    EmbeddedGraph g = load_graph(file);
    RgbSplit split;
    if (!split_text.empty())
        split = parse_split(split_text, g.num_nodes());
    else if (g.rgb)
        split = *g.rgb;
    else
        throw Error("no RGB split: pass --split r,g,b or add an rgb line to the file");
    Pairing sigma = rgb_pairing(g.num_nodes(), split);
    Rat pr = tripartite_pr(g, split);
    if (json_out) {
        nlohmann::json j;
        j["pr"] = rat_str(pr);
        j["sigma"] = sigma.str();
        j["sign_oe"] = sign_oe(sigma);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Pr = " << rat_str(pr) << "\n";
        std::cout << "sigma = " << sigma.str() << "\n";
        std::cout << "sign_oe = " << (sign_oe(sigma) > 0 ? "+1" : "-1") << "\n";
    }
    return 0;
}

int cmd_qmatrix(const std::string& coloring_text, const std::string& pairing_text,
                bool json_out) {
    NodeColoring c = NodeColoring::from_string(coloring_text);
    if (!c.balanced()) throw Error("coloring must have equal black and white counts");
    QMatrix qa = q_matrix_combinatorial(c);
    QMatrix qb = q_matrix_solve(c);
    bool agree = qa.entries == qb.entries;

    if (!pairing_text.empty()) {
        Pairing sigma = Pairing::parse(c.size(), pairing_text);
        SignedMonomialPoly poly = pr_polynomial(sigma, c);
        if (json_out) {
            nlohmann::json j;
            j["sigma"] = sigma.str();
            j["polynomial"] = poly.str();
            j["routes_agree"] = agree;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Pr(" << sigma.str() << ") = " << poly.str() << "\n";
        }
        return agree ? 0 : 1;
    }

    if (json_out) {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const Pairing& p : qa.rows) j["rows"].push_back(p.str());
        j["cols"] = nlohmann::json::array();
        for (const Pairing& p : qa.cols) j["cols"].push_back(p.str());
        j["entries"] = nlohmann::json::array();
        for (auto& row : qa.entries) {
            nlohmann::json r = nlohmann::json::array();
            for (auto& e : row) r.push_back(e.get_str());
            j["entries"].push_back(r);
        }
        j["routes_agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "columns (black-white pairings):\n";
        for (size_t jcol = 0; jcol < qa.cols.size(); ++jcol)
            std::cout << "  [" << jcol << "] " << qa.cols[jcol].str() << "\n";
        std::cout << "rows (planar pairings) and entries:\n";
        for (size_t i = 0; i < qa.rows.size(); ++i) {
            std::cout << "  " << qa.rows[i].str() << " :";
            for (auto& e : qa.entries[i]) std::cout << ' ' << e.get_str();
            std::cout << "\n";
        }
        std::cout << "routes_agree = " << (agree ? "true" : "false") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_verify(const std::string& suite, uint64_t seed, int count, long long cap,
               bool json_out) {
    SuiteResult result = run_suite(suite, seed, count, cap);
    if (json_out) {
        std::cout << result.report << "\n";
    } else {
        nlohmann::json j = nlohmann::json::parse(result.report);
        for (auto& inst : j["instances"]) {
            std::cout << inst.dump() << "\n";
            if (!inst["ok"].get<bool>() && inst.contains("report"))
                std::cout << "counterexample:\n" << inst["report"].dump(2) << "\n";
        }
        std::cout << "suite=" << suite << " pass=" << (result.pass ? "true" : "false")
                  << "\n";
    }
    return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimer / double-dimer computations on planar bipartite graphs"};
    app.require_subcommand(1);

    std::string file, split_text, coloring_text, pairing_text, suite;
    bool enumerate = false, json_out = false;
    long long cap = 10'000'000;
    uint64_t seed = 0;
    int count = 20;

    CLI::App* zd = app.add_subcommand("zd", "dimer partition function of a graph file");
    zd->add_option("file", file)->required();
    zd->add_flag("--enumerate", enumerate, "force the enumeration cross-check");
    zd->add_option("--cap", cap, "enumeration state cap");
    zd->add_flag("--json", json_out);

    CLI::App* pr = app.add_subcommand("pr", "tripartite double-dimer probability");
    pr->add_option("file", file)->required();
    pr->add_option("--split", split_text, "r,g,b");
    pr->add_flag("--json", json_out);

    CLI::App* qm = app.add_subcommand("qmatrix", "Q^(DD) for a node coloring");
    qm->add_option("--coloring", coloring_text, "BW string")->required();
    qm->add_option("--pairing", pairing_text, "print this row as a Y-polynomial");
    qm->add_flag("--json", json_out);

    CLI::App* vf = app.add_subcommand("verify", "randomized verification campaign");
    vf->add_option("--suite", suite, "kuo|condense|tripartite|kasteleyn|signs")->required();
    vf->add_option("--seed", seed);
    vf->add_option("--count", count);
    vf->add_option("--cap", cap);
    vf->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // flag errors are input errors
    }

    try {
        if (zd->parsed()) return cmd_zd(file, enumerate, cap, json_out);
        if (pr->parsed()) return cmd_pr(file, split_text, json_out);
        if (qm->parsed()) return cmd_qmatrix(coloring_text, pairing_text, json_out);
        if (vf->parsed()) return cmd_verify(suite, seed, count, cap, json_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "twistlab/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "twistlab/elliptic.hpp"
#include "twistlab/ktheory.hpp"
#include "twistlab/lattice.hpp"
#include "twistlab/serialize.hpp"
#include "twistlab/twists.hpp"

namespace twistlab {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 2;
    int N = 2;
    std::vector<int> degrees;
    std::string field = "Q";
    std::string word;
    std::string w1;
    std::string w2;
    int object = 1;
    std::vector<int> t;
    std::string matrix;
    bool reflections = false;
    bool json = false;

    ChainParams chain() const {
        ChainParams p = ChainParams::uniform(n, N);
        if (!degrees.empty())
            p.edge_degrees = degrees;
        p.validate();
        return p;
    }
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string row_string(const std::vector<long long>& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? ", " : "") + std::to_string(r[i]);
    return s + "]";
}

std::string matrix_string(const std::vector<std::vector<int>>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? ", [" : "[") + join(m[i], ", ") + "]";
    return s + "]";
}

template <class K>
std::string element_string(const ZigzagAlgebra& alg, const Element<K>& e) {
    std::string s;
    for (const auto& [b, c] : e.terms()) {
        std::string cs = to_string(c);
        if (!s.empty())
            s += " + ";
        if (cs != "1")
            s += cs + "*";
        s += alg.basis(b).name;
    }
    return s.empty() ? "0" : s;
}

template <class K>
void print_complex(std::ostream& out, const ProjComplex<K>& m) {
    if (m.is_zero()) {
        out << "  0\n";
        return;
    }
    for (const auto& [t, sums] : m.terms()) {
        out << "  C^" << t << " =";
        for (const auto& s : sums)
            out << ' ' << to_string(s);
        out << '\n';
    }
    for (const auto& [t, d] : m.differentials())
        for (const auto& [rc, e] : d.entries)
            out << "  d^" << t << "[" << rc.first << "," << rc.second << "] = " << element_string(m.algebra(), e)
                << '\n';
}

std::string table_string(const BigradedTable& t) {
    if (t.empty())
        return "0";
    std::string s;
    for (const auto& [k, v] : t)
        s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(k.first) + "," + std::to_string(k.second) +
             "):" + std::to_string(v);
    return s;
}

void print_chain(std::ostream& out, const ChainParams& p, const std::string& field) {
    out << "chain: n=" << p.n << " N=" << p.N << " degrees=[" << join(p.edge_degrees) << "] field=" << field << '\n';
}

BraidWord word_arg(const std::string& text, int n, const char* flag) {
    try {
        return parse_braid_word(text, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

template <class K>
int cmd_check_relations(const RunConfig& cfg, std::ostream& out) {
    auto alg = make_algebra(cfg.chain());
    auto rep = verify_relations<K>(alg);
    if (cfg.json) {
        Json j;
        j["params"] = params_to_json(alg->params());
        j["field"] = field_name<K>();
        j["report"] = relation_report_to_json(rep);
        out << j.dump(2) << '\n';
    } else {
        print_chain(out, alg->params(), field_name<K>());
        for (const auto& c : rep.checks)
            out << c.relation << " [" << to_string(c.lhs) << "] ~ [" << to_string(c.rhs) << "] on P" << c.object
                << ": " << (c.passed ? "ok" : "FAILED (" + c.detail + ")") << '\n';
        out << (rep.all_passed() ? "all relations hold" : "relation failure") << " (" << rep.checks.size()
            << " checks)\n";
    }
    return rep.all_passed() ? exit_code::ok : exit_code::relation_failure;
}

template <class K>
int cmd_act(const RunConfig& cfg, std::ostream& out) {
    auto alg = make_algebra(cfg.chain());
    auto w = word_arg(cfg.word, alg->n(), "--word");
    if (cfg.object < 1 || cfg.object > alg->n())
        throw UsageError("--object " + std::to_string(cfg.object) + " outside [1, " + std::to_string(alg->n()) + "]");
    auto m = apply_word(w, ProjComplex<K>::projective(alg, cfg.object));
    auto chi = euler_class(m);
    auto hom = homology_table(m);
    if (cfg.json) {
        Json j;
        j["word"] = to_string(w);
        j["object"] = cfg.object;
        j["complex"] = complex_to_json(m);
        j["euler_class"] = laurent_to_json(chi);
        Json h = Json::array();
        for (const auto& t : hom)
            h.push_back(table_to_json(t));
        j["homology"] = h;
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    print_chain(out, alg->params(), field_name<K>());
    out << "word: [" << to_string(w) << "]\nobject: P" << cfg.object << "\ncomplex:\n";
    print_complex(out, m);
    out << "euler_class: (";
    for (std::size_t i = 0; i < chi.size(); ++i)
        out << (i ? ", " : "") << to_string(chi[i]);
    out << ")\nhomology (t,s):dim\n";
    for (std::size_t i = 0; i < hom.size(); ++i)
        out << "  RHom(P" << i + 1 << ", -): " << table_string(hom[i]) << '\n';
    return exit_code::ok;
}

template <class K>
int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    auto alg = make_algebra(cfg.chain());
    auto w1 = word_arg(cfg.w1, alg->n(), "--w1");
    auto w2 = word_arg(cfg.w2, alg->n(), "--w2");
    auto rep = compare_words<K>(alg, w1, w2);
    if (cfg.json) {
        Json j;
        j["params"] = params_to_json(alg->params());
        j["w1"] = to_string(w1);
        j["w2"] = to_string(w2);
        j["report"] = comparison_to_json(rep);
        out << j.dump(2) << '\n';
    } else {
        print_chain(out, alg->params(), field_name<K>());
        out << "w1: [" << to_string(w1) << "]\nw2: [" << to_string(w2) << "]\n";
        for (std::size_t k = 0; k < rep.isomorphic_on_vertex.size(); ++k)
            out << "P" << k + 1 << ": " << (rep.isomorphic_on_vertex[k] ? "isomorphic" : "not isomorphic") << '\n';
        out << "hom_matrix(w1): " << matrix_string(rep.hom_matrix_w1) << '\n';
        out << "hom_matrix(w2): " << matrix_string(rep.hom_matrix_w2) << '\n';
        if (rep.verdict == Verdict::Distinct)
            out << "verdict: distinct\nwitness: P" << rep.witness->vertex << ": " << rep.witness->invariant << '\n';
        else
            out << "verdict: indistinguishable on objects\n";
    }
    return rep.verdict == Verdict::Distinct ? exit_code::distinct : exit_code::ok;
}

IntMatrix parse_matrix(const std::string& text) {
    IntMatrix m;
    try {
        if (!text.empty() && text.front() == '[')
            return Json::parse(text).get<IntMatrix>();
    } catch (const std::exception& e) {
        throw UsageError(std::string("--matrix: ") + e.what());
    }
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<long long> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                r.push_back(std::stoll(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos)
                    throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw UsageError("--matrix: bad entry '" + cell + "'");
            }
        }
        m.push_back(std::move(r));
    }
    return m;
}

int cmd_lattice(const RunConfig& cfg, std::ostream& out) {
    IntersectionLattice l;
    std::string name;
    if (!cfg.t.empty() && !cfg.matrix.empty())
        throw UsageError("lattice: give either --t or --matrix, not both");
    if (!cfg.t.empty()) {
        if (cfg.t.size() != 3)
            throw UsageError("--t expects three integers b1,b2,b3");
        l = build_tdiagram(cfg.t[0], cfg.t[1], cfg.t[2]);
        name = "T(" + join(cfg.t) + ")";
    } else if (!cfg.matrix.empty()) {
        l.form = parse_matrix(cfg.matrix);
        name = "matrix";
    } else {
        throw UsageError("lattice: --t or --matrix is required");
    }
    l.validate();
    auto d = definiteness(l);

    bool ok = true;
    std::vector<std::pair<int, IntMatrix>> refl;
    if (cfg.reflections) {
        for (int i = 0; i < l.rank(); ++i) {
            if (l.form[i][i] != -2)
                continue;
            auto r = pl_reflection(i, l);
            IntMatrix rt(l.rank(), std::vector<long long>(l.rank()));
            for (int a = 0; a < l.rank(); ++a)
                for (int b = 0; b < l.rank(); ++b)
                    rt[a][b] = r[b][a];
            ok = ok && rt * l.form * r == l.form && r * r == identity_int(l.rank());
            refl.emplace_back(i, std::move(r));
        }
    }

    if (cfg.json) {
        Json j;
        j["lattice"] = name;
        j["rank"] = l.rank();
        j["form"] = l.form;
        j["definiteness"] = definiteness_to_json(d);
        if (cfg.reflections) {
            Json r = Json::array();
            for (const auto& [i, m] : refl)
                r.push_back({{"node", i}, {"matrix", m}});
            j["reflections"] = r;
            j["reflections_ok"] = ok;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "lattice: " << name << "\nrank: " << l.rank() << "\ndefiniteness: " << to_string(d.kind)
            << "\nsignature (+,-,0): (" << d.positive << "," << d.negative << "," << d.kernel << ")\n";
        for (const auto& [i, m] : refl) {
            out << "reflection " << i << ":\n";
            for (const auto& row : m)
                out << "  " << row_string(row) << '\n';
        }
        if (cfg.reflections)
            out << "reflections: " << (ok ? "involutions preserving the form" : "FAILED") << '\n';
    }
    return ok ? exit_code::ok : exit_code::relation_failure;
}

int cmd_elliptic(const RunConfig& cfg, std::ostream& out) {
    Mat2 m;
    try {
        m = elliptic_word(cfg.word);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Mat2 a = elliptic_generator("O"), b = elliptic_generator("Op");
    const bool braid = a * b * a == b * a * b;
    const bool sixth = is_identity((a * b).power(6));
    const bool translation = is_identity(elliptic_generator("L").inverse() * a);
    const bool ok = braid && sixth && translation;
    if (cfg.json) {
        Json j;
        j["word"] = cfg.word;
        j["matrix"] = mat2_to_json(m);
        j["determinant"] = m.det();
        j["identity"] = is_identity(m);
        j["central"] = is_central(m);
        j["checks"] = {{"braid_relation", braid}, {"ab_sixth_power_identity", sixth}, {"l_inverse_o_identity", translation}};
        out << j.dump(2) << '\n';
    } else {
        out << "word: " << cfg.word << "\nmatrix: " << to_string(m) << "\ndeterminant: " << m.det() << '\n';
        if (is_identity(m))
            out << "identity: yes (acts trivially on Mukai vectors)\n";
        else if (is_central(m))
            out << "central: yes (acts as -1 on Mukai vectors)\n";
        else
            out << "central: no\n";
        out << "check O Op O = Op O Op: " << (braid ? "ok" : "FAILED") << '\n';
        out << "check (O Op)^6 = 1: " << (sixth ? "ok" : "FAILED") << '\n';
        out << "check L^-1 O = 1: " << (translation ? "ok" : "FAILED") << '\n';
    }
    return ok ? exit_code::ok : exit_code::relation_failure;
}

int cmd_dump_algebra(const RunConfig& cfg, std::ostream& out) {
    auto alg = make_algebra(cfg.chain());
    if (cfg.json) {
        out << algebra_to_json(*alg).dump(2) << '\n';
        return exit_code::ok;
    }
    print_chain(out, alg->params(), cfg.field);
    out << "dimension: " << alg->dimension() << "\nbasis:\n";
    for (const auto& b : alg->basis())
        out << "  " << b.name << "  " << b.source << " -> " << b.target << "  degree " << b.degree << '\n';
    out << "products:\n";
    for (int x = 0; x < alg->dimension(); ++x)
        for (int y = 0; y < alg->dimension(); ++y)
            if (auto p = alg->product(x, y))
                out << "  " << alg->basis(x).name << " * " << alg->basis(y).name << " = " << alg->basis(*p).name
                    << '\n';
    out << "trace: 1 on";
    for (int b = 0; b < alg->dimension(); ++b)
        if (alg->trace_of(b))
            out << ' ' << alg->basis(b).name;
    out << '\n';
    return exit_code::ok;
}

template <class K>
int dispatch_field(const std::string& cmd, const RunConfig& cfg, std::ostream& out) {
    if (cmd == "check-relations")
        return cmd_check_relations<K>(cfg, out);
    if (cmd == "act")
        return cmd_act<K>(cfg, out);
    return cmd_compare<K>(cfg, out);
}

int dispatch(const std::string& cmd, const RunConfig& cfg, std::ostream& out) {
    if (cmd == "lattice")
        return cmd_lattice(cfg, out);
    if (cmd == "elliptic")
        return cmd_elliptic(cfg, out);
    if (cmd == "dump-algebra")
        return cmd_dump_algebra(cfg, out);
    if (cfg.field == "Q")
        return dispatch_field<Rational>(cmd, cfg, out);
    std::uint64_t p = 0;
    try {
        std::size_t used = 0;
        p = std::stoull(cfg.field, &used);
        if (used != cfg.field.size())
            throw std::invalid_argument(cfg.field);
    } catch (const std::exception&) {
        throw UsageError("--field must be Q or a prime, got '" + cfg.field + "'");
    }
    try {
        ModP::set_modulus(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--field: ") + e.what());
    }
    return dispatch_field<ModP>(cmd, cfg, out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braid group actions by spherical twists on A_n-chains, and their decategorified shadows.\n"
                 "Defaults: n=2, N=2, every edge degree 1, field Q.",
                 "twistlab"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--n", cfg.n, "chain length (number of spherical objects)")->capture_default_str();
    app.add_option("--N", cfg.N, "spherical dimension")->capture_default_str();
    app.add_option("--degrees", cfg.degrees, "edge degrees d_1,...,d_{n-1} in [1, N-1] (default all 1)")
        ->delimiter(',');
    app.add_option("--field", cfg.field, "Q or a prime p")->capture_default_str();
    app.add_flag("--json", cfg.json, "JSON output");

    auto* check = app.add_subcommand("check-relations", "verify inverse, braid and commutation relations on every P_k");
    auto* act = app.add_subcommand("act", "apply a braid word to P_k and print the minimized complex");
    act->add_option("--word", cfg.word, "whitespace-separated nonzero integers, e.g. \"1 2 -1\"");
    act->add_option("--object", cfg.object, "vertex k of P_k")->capture_default_str();
    auto* compare = app.add_subcommand("compare", "compare two braid words on every P_k");
    compare->add_option("--w1", cfg.w1, "first word");
    compare->add_option("--w2", cfg.w2, "second word");
    auto* lattice = app.add_subcommand("lattice", "definiteness of a T(b1,b2,b3) or explicit lattice");
    lattice->add_option("--t", cfg.t, "b1,b2,b3 (each >= 2)")->delimiter(',');
    lattice->add_option("--matrix", cfg.matrix, "symmetric form, rows split by ';' (\"-2,1;1,-2\") or JSON");
    lattice->add_flag("--reflections", cfg.reflections, "print the reflection in every -2 node");
    auto* elliptic = app.add_subcommand("elliptic", "Mukai-vector matrix of a word in O, Op, L");
    elliptic->add_option("--word", cfg.word, "e.g. \"(O Op)^6\" or \"L^-1 O\"");
    auto* dump = app.add_subcommand("dump-algebra", "basis, products and trace of the zigzag algebra");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    std::string cmd;
    for (auto* s : {check, act, compare, lattice, elliptic, dump})
        if (*s)
            cmd = s->get_name();

    try {
        return dispatch(cmd, cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::relation_failure;
    }
}

} // namespace twistlab

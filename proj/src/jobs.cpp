#include "orient/jobs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orient/index.hpp"
#include "orient/omega.hpp"
#include "orient/orientability.hpp"
#include "orient/skeleton.hpp"

namespace orient::cli {

JobKind job_kind_from_name(const std::string& name) {
    if (name == "group") return JobKind::Group;
    if (name == "euler-form") return JobKind::EulerForm;
    if (name == "omega") return JobKind::Omega;
    if (name == "orientability") return JobKind::Orientability;
    if (name == "skeleton") return JobKind::Skeleton;
    throw IncompleteDataError("unknown job kind '" + name + "'");
}

const char* job_kind_name(JobKind kind) {
    switch (kind) {
        case JobKind::Group: return "group";
        case JobKind::EulerForm: return "euler-form";
        case JobKind::Omega: return "omega";
        case JobKind::Orientability: return "orientability";
        case JobKind::Skeleton: return "skeleton";
    }
    return "?";
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool is_rational_token(const std::string& tok) {
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i >= tok.size()) return false;
    bool digits = false, slash = false;
    for (; i < tok.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
            digits = true;
        } else if (tok[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string list_of_mpz(const std::vector<mpz_class>& v) {
    std::vector<std::string> items;
    for (const auto& x : v) items.push_back(x.get_str());
    return join(items, " ");
}

std::string sign_str(int s) { return s >= 0 ? "+" : "-"; }

void put_matrix_text(std::ostringstream& os, const std::string& title,
                     const fgab::IntMatrix& m) {
    os << title << ":\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << " ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << " " << m.at(r, c).get_str();
        os << "\n";
    }
}

std::size_t generator_index(const topo::ModelPtr& model, const std::string& symbol, int line) {
    const auto& gens = model->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].symbol == symbol) return i;
    // positional alias g1..gk
    if (symbol.size() >= 2 && symbol[0] == 'g') {
        bool digits = std::all_of(symbol.begin() + 1, symbol.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
        if (digits) {
            std::size_t k = std::stoul(symbol.substr(1));
            if (k >= 1 && k <= gens.size()) return k - 1;
        }
    }
    throw ParseError("unknown generator '" + symbol + "' on model " + model->name(), line, 1);
}

} // namespace

topo::CohClass parse_coh_class(const topo::ModelPtr& model, const std::string& text, int line) {
    topo::CohClass out(model);
    auto tokens = split_ws(text);
    if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "0")) return out;

    std::size_t pos = 0;
    while (pos < tokens.size()) {
        mpq_class coef(1);
        bool have_coef = false;
        if (is_rational_token(tokens[pos])) {
            coef = mpq_class(tokens[pos]);
            coef.canonicalize();
            have_coef = true;
            ++pos;
        }
        topo::Monomial mono(model->generators().size(), 0);
        bool have_mono = false;
        if (pos < tokens.size() && tokens[pos] != "+") {
            const std::string& t = tokens[pos];
            if (t == "1") {
                have_mono = true; // explicit scalar monomial
            } else {
                std::size_t start = 0;
                while (start <= t.size()) {
                    auto star = t.find('*', start);
                    std::string factor =
                        t.substr(start, star == std::string::npos ? star : star - start);
                    if (factor.empty())
                        throw ParseError("empty factor in monomial '" + t + "'", line, 1);
                    int exponent = 1;
                    std::string symbol = factor;
                    auto caret = factor.find('^');
                    if (caret != std::string::npos) {
                        symbol = factor.substr(0, caret);
                        exponent = int(parse_small_integer(factor.substr(caret + 1), line));
                        if (exponent < 1)
                            throw ParseError("monomial exponents must be >= 1", line, 1);
                    }
                    std::size_t g = generator_index(model, symbol, line);
                    mono[g] += exponent;
                    if (mono[g] >= model->generators()[g].nilpotence)
                        throw ParseError("exponent exceeds nilpotence of generator '" + symbol +
                                             "'",
                                         line, 1);
                    if (star == std::string::npos) break;
                    start = star + 1;
                }
                have_mono = true;
            }
            ++pos;
        }
        if (!have_coef && !have_mono)
            throw ParseError("malformed class expression '" + text + "'", line, 1);
        out.set(mono, out.coefficient(mono) + coef);
        if (pos < tokens.size()) {
            if (tokens[pos] != "+")
                throw ParseError("expected '+' between terms in '" + text + "'", line, 1);
            ++pos;
            if (pos == tokens.size())
                throw ParseError("trailing '+' in class expression", line, 1);
        }
    }
    return out;
}

namespace {

JobResult run_group(const ConfigDocument& config) {
    const auto& pres = config.require_matrix("presentation");
    auto snf = fgab::snf_decompose(pres.matrix);

    std::vector<mpz_class> diagonal;
    for (std::size_t i = 0; i < std::min(snf.snf.rows(), snf.snf.cols()); ++i)
        diagonal.push_back(snf.snf.at(i, i));
    std::vector<mpz_class> two_exp(snf.group.two_primary.begin(), snf.group.two_primary.end());

    JobResult result;
    ConfigDocument& doc = result.structured;
    doc.set("job", "group");
    doc.set("group", snf.group.to_string());
    doc.set("free_rank", std::to_string(snf.group.free_rank));
    doc.set("two_primary_exponents", list_of_mpz(two_exp));
    doc.set("odd_orders", list_of_mpz(snf.group.odd_orders));
    doc.set("torsion_order", snf.group.torsion_order().get_str());
    doc.set("snf_diagonal", list_of_mpz(diagonal));
    doc.set_matrix("snf", snf.snf);
    doc.set_matrix("u", snf.u);
    doc.set_matrix("v", snf.v);

    std::ostringstream os;
    os << "group: " << snf.group.to_string() << "\n";
    os << "free rank: " << snf.group.free_rank << "\n";
    os << "snf diagonal: " << list_of_mpz(diagonal) << "\n";
    put_matrix_text(os, "snf", snf.snf);
    put_matrix_text(os, "u", snf.u);
    put_matrix_text(os, "v", snf.v);
    result.text = os.str();
    return result;
}

JobResult run_euler_form(const ConfigDocument& config) {
    auto model = topo::build_model(config.require("model").value);
    auto kind = index::kind_from_name(config.require("operator").value);
    index::OperatorDescriptor op{kind, model};

    std::vector<topo::KClassData> witnesses;
    for (int n = 1;; ++n) {
        std::string prefix = "witness." + std::to_string(n) + ".";
        if (!config.has(prefix + "rank")) break;
        const auto& rank_entry = config.require(prefix + "rank");
        topo::KClassData k{model, parse_integer(rank_entry.value, rank_entry.line), {}};
        for (int i = 1; 2 * i <= model->dimension(); ++i) {
            std::string key = prefix + "c" + std::to_string(i);
            if (config.has(key)) {
                const auto& e = config.require(key);
                k.chern.push_back(parse_coh_class(model, e.value, e.line));
            } else {
                k.chern.push_back(model->zero());
            }
        }
        witnesses.push_back(std::move(k));
    }
    if (witnesses.empty())
        throw IncompleteDataError("euler-form job needs witness.1.rank, witness.2.rank, ...");

    auto form = index::euler_form(op, witnesses);

    JobResult result;
    ConfigDocument& doc = result.structured;
    doc.set("job", "euler-form");
    doc.set("model", model->name());
    doc.set("operator", index::kind_name(kind));
    doc.set("witness_count", std::to_string(witnesses.size()));
    std::vector<mpz_class> ranks;
    for (const auto& w : witnesses) ranks.push_back(w.rank);
    doc.set("ranks", list_of_mpz(ranks));
    doc.set("untwisted_index", index::untwisted_real_index(op).get_str());
    doc.set_matrix("chi", form.matrix());

    std::ostringstream os;
    os << "model: " << model->name() << "\n";
    os << "operator: " << index::kind_name(kind) << "\n";
    os << "witnesses: " << witnesses.size() << "\n";
    put_matrix_text(os, "chi", form.matrix());
    result.text = os.str();
    return result;
}

fgab::FgAbGroup group_from_config(const ConfigDocument& config) {
    fgab::FgAbGroup g;
    if (config.has("free_rank")) {
        const auto& e = config.require("free_rank");
        long r = parse_small_integer(e.value, e.line);
        if (r < 0) throw ParseError("free_rank must be >= 0", e.line, 1);
        g.free_rank = std::size_t(r);
    }
    if (config.has("two_primary")) {
        const auto& e = config.require("two_primary");
        for (const auto& v : parse_integer_list(e.value, e.line)) {
            if (v < 1) throw ParseError("2-primary exponents must be >= 1", e.line, 1);
            g.two_primary.push_back(unsigned(v.get_ui()));
        }
    }
    if (config.has("odd_orders")) {
        const auto& e = config.require("odd_orders");
        for (const auto& v : parse_integer_list(e.value, e.line)) {
            if (v <= 1 || mpz_even_p(v.get_mpz_t()))
                throw ParseError("odd orders must be odd and > 1", e.line, 1);
            g.odd_orders.push_back(v);
        }
    }
    return g;
}

fgab::GroupElement element_from_config(const ConfigDocument& config, const fgab::FgAbGroup& g,
                                       const std::string& prefix) {
    std::vector<mpz_class> free_coords(g.free_rank, mpz_class(0));
    std::vector<mpz_class> two_coords(g.two_primary.size(), mpz_class(0));
    std::vector<mpz_class> odd_coords(g.odd_orders.size(), mpz_class(0));
    auto fill = [&](const char* part, std::vector<mpz_class>& target) {
        std::string key = prefix + "." + part;
        if (!config.has(key)) return;
        const auto& e = config.require(key);
        auto values = parse_integer_list(e.value, e.line);
        if (values.size() != target.size())
            throw ParseError(key + " needs " + std::to_string(target.size()) + " entries",
                             e.line, 1);
        target = std::move(values);
    };
    fill("free", free_coords);
    fill("two", two_coords);
    fill("odd", odd_coords);
    return fgab::make_element(g, std::move(free_coords), std::move(two_coords),
                              std::move(odd_coords));
}

JobResult run_omega(const ConfigDocument& config) {
    fgab::FgAbGroup k0 = group_from_config(config);
    fgab::IntMatrix chi(k0.free_rank, k0.free_rank);
    if (auto m = config.get_matrix("chi")) chi = (*m)->matrix;
    index::EulerForm form(std::move(chi), k0);

    std::vector<int> xi(k0.two_primary.size(), +1);
    if (config.has("xi")) {
        const auto& e = config.require("xi");
        if (!e.value.empty()) xi = parse_sign_list(e.value, e.line);
    }
    omega::OmegaGroup g(k0, std::move(form), std::move(xi));

    omega::OmegaElement x{element_from_config(config, k0, "x"), +1};
    omega::OmegaElement y{element_from_config(config, k0, "y"), +1};
    if (config.has("x.sign")) {
        const auto& e = config.require("x.sign");
        x.sign = parse_sign(e.value, e.line);
    }
    if (config.has("y.sign")) {
        const auto& e = config.require("y.sign");
        y.sign = parse_sign(e.value, e.line);
    }

    auto product = omega::multiply(g, x, y);
    int phi = omega::swap_sign(g.chi(), x.coords, y.coords, omega::SwapFlavor::TorsorPhi);
    int lambda = omega::swap_sign(g.chi(), x.coords, y.coords, omega::SwapFlavor::TorsorLambda);

    JobResult result;
    ConfigDocument& doc = result.structured;
    doc.set("job", "omega");
    doc.set("group", k0.to_string());
    doc.set("product.free", list_of_mpz(product.coords.free_coords));
    doc.set("product.two", list_of_mpz(product.coords.two_coords));
    doc.set("product.odd", list_of_mpz(product.coords.odd_coords));
    doc.set("product.sign", sign_str(product.sign));
    doc.set("swap_sign_phi", sign_str(phi));
    doc.set("swap_sign_lambda", sign_str(lambda));

    std::ostringstream os;
    os << "group: " << k0.to_string() << "\n";
    auto show = [&os](const char* name, const omega::OmegaElement& e) {
        os << name << ": free=[" << list_of_mpz(e.coords.free_coords) << "] two=["
           << list_of_mpz(e.coords.two_coords) << "] odd=[" << list_of_mpz(e.coords.odd_coords)
           << "] sign=" << sign_str(e.sign) << "\n";
    };
    show("x", x);
    show("y", y);
    show("product", product);
    os << "direct-sum exchange sign: " << sign_str(phi) << "\n";
    os << "product exchange sign: " << sign_str(lambda) << "\n";
    result.text = os.str();
    return result;
}

JobResult run_orientability(const ConfigDocument& config) {
    auto model = topo::build_model(config.require("model").value);
    auto kind = index::kind_from_name(config.require("operator").value);
    auto group = rules::GroupDescriptor::parse(config.require("group").value);
    rules::Scenario sc{model, index::OperatorDescriptor{kind, model}, group, {}};
    if (config.has("force_complex_symbol")) {
        const auto& e = config.require("force_complex_symbol");
        if (e.value == "true")
            sc.force_complex_symbol = true;
        else if (e.value == "false")
            sc.force_complex_symbol = false;
        else
            throw ParseError("force_complex_symbol must be true or false", e.line, 1);
    }
    auto verdict = rules::evaluate(sc);

    JobResult result;
    ConfigDocument& doc = result.structured;
    doc.set("job", "orientability");
    doc.set("model", model->name());
    doc.set("operator", index::kind_name(kind));
    doc.set("group", group.to_string());
    doc.set("status", rules::status_name(verdict.status));
    for (std::size_t i = 0; i < verdict.trail.size(); ++i) {
        doc.set("rule." + std::to_string(i + 1) + ".id", verdict.trail[i].rule_id);
        doc.set("rule." + std::to_string(i + 1) + ".citation", verdict.trail[i].citation);
    }
    for (std::size_t i = 0; i < verdict.required_choices.size(); ++i)
        doc.set("choice." + std::to_string(i + 1), verdict.required_choices[i]);

    std::ostringstream os;
    os << "status: " << rules::status_name(verdict.status) << "\n";
    for (const auto& r : verdict.trail) os << "rule: " << r.rule_id << " (" << r.citation << ")\n";
    for (const auto& c : verdict.required_choices) os << "choice: " << c << "\n";
    result.text = os.str();
    return result;
}

JobResult run_skeleton(const ConfigDocument& config) {
    skel::SimplicialComplex k;
    std::string source;
    if (config.has("complex")) {
        source = config.require("complex").value;
        k = skel::library::by_name(source);
    } else if (config.has("complex_file")) {
        source = config.require("complex_file").value;
        std::ifstream in(source);
        if (!in) throw ParseError("cannot open complex file '" + source + "'", 0, 0);
        k = skel::read_complex(in);
    } else {
        throw IncompleteDataError("skeleton job needs complex=<library name> or complex_file=");
    }
    const auto& d_entry = config.require("d");
    int d = int(parse_small_integer(d_entry.value, d_entry.line));

    const int n = k.dimension();
    auto sub = skel::barycentric_subdivision(k);
    auto dual = skel::dual_skeleton(sub, d);
    auto skeleton = skel::relative_skeleton(k, n - d);
    auto embedded = skel::embed_in_subdivision(sub, skeleton);

    bool disjoint = true;
    for (const auto& f : embedded.faces)
        if (dual.contains(f)) disjoint = false;
    auto dual_vertices = dual.vertex_set();
    for (int v : embedded.vertex_set())
        if (dual_vertices.count(v)) disjoint = false;

    auto prism = skel::prism_triangulation(k);
    bool ends_match = skel::prism_end(prism, 0) == k && skel::prism_end(prism, 1) == k;

    JobResult result;
    ConfigDocument& doc = result.structured;
    doc.set("job", "skeleton");
    doc.set("complex", source);
    doc.set("dimension", std::to_string(n));
    doc.set("pure", k.pure() ? "true" : "false");
    doc.set("d", std::to_string(d));
    doc.set("vertices", std::to_string(k.face_count(0)));
    doc.set("top_cells", std::to_string(k.face_count(n)));
    doc.set("euler_characteristic", k.euler_characteristic().get_str());
    doc.set("subdivision_vertices", std::to_string(sub.complex.face_count(0)));
    doc.set("subdivision_top_cells", std::to_string(sub.complex.face_count(n)));
    doc.set("dual_faces", std::to_string(dual.faces.size()));
    for (int dd = 0; dd < d; ++dd)
        doc.set("dual_cells." + std::to_string(dd), std::to_string(skel::dual_cell_count(k, dd)));
    doc.set("skeleton_faces", std::to_string(skeleton.faces.size()));
    doc.set("disjoint", disjoint ? "true" : "false");
    doc.set("prism_top_cells", std::to_string(prism.face_count(n + 1)));
    doc.set("prism_ends_match", ends_match ? "true" : "false");

    std::ostringstream os;
    os << "complex: " << source << " (dimension " << n << ", "
       << (k.pure() ? "pure" : "not pure") << ")\n";
    os << "vertices: " << k.face_count(0) << "\n";
    os << "top cells: " << k.face_count(n) << "\n";
    os << "euler characteristic: " << k.euler_characteristic().get_str() << "\n";
    os << "subdivision: " << sub.complex.face_count(0) << " vertices, "
       << sub.complex.face_count(n) << " top cells\n";
    os << "dual skeleton (d=" << d << "): " << dual.faces.size() << " faces\n";
    os << "relative skeleton (dim <= " << (n - d) << "): " << skeleton.faces.size()
       << " faces\n";
    os << "disjoint: " << (disjoint ? "yes" : "no") << "\n";
    os << "prism top cells: " << prism.face_count(n + 1) << "\n";
    os << "prism ends match: " << (ends_match ? "yes" : "no") << "\n";
    result.text = os.str();
    return result;
}

} // namespace

JobResult run_job(JobKind kind, const ConfigDocument& config) {
    switch (kind) {
        case JobKind::Group: return run_group(config);
        case JobKind::EulerForm: return run_euler_form(config);
        case JobKind::Omega: return run_omega(config);
        case JobKind::Orientability: return run_orientability(config);
        case JobKind::Skeleton: return run_skeleton(config);
    }
    throw IncompleteDataError("unreachable job kind");
}

JobResult run_config(JobKind kind, const std::string& path) {
    return run_job(kind, read_document(path));
}

std::string render(const JobResult& result, OutputFormat format) {
    return format == OutputFormat::Structured ? serialize_document(result.structured)
                                              : result.text;
}

} // namespace orient::cli

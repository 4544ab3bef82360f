// envelkit: exact invariants of universal enveloping algebras at the command
// line. Batch-oriented: catalog ids or structure-constant files in, text and
// JSON reports out.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "envelkit/distinguish.hpp"
#include "envelkit/invariants.hpp"
#include "envelkit/pbw.hpp"

using namespace envelkit;
using ordered_json = nlohmann::ordered_json;

namespace {

enum ExitCode {
    kOk = 0,
    kParse = 1,
    kInvalidAlgebra = 2,
    kPrecondition = 3,
    kCharacteristic = 4,
    kInconclusive = 5,
};

// input is a catalog id when it parses as one, otherwise a file path
LieAlgebra load_algebra(const std::string& arg) {
    try {
        return construct(CatalogId::parse(arg));
    } catch (const ParseError&) {
        // fall through to file input
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open '" + arg + "' (not a catalog id or file)");
    return read_structure_constants(in);
}

void emit(const Report& rep, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << rep.text();
        return;
    }
    if (json_path == "-") {
        std::cout << rep.json() << "\n";
        return;
    }
    std::ofstream out(json_path);
    if (!out) throw ParseError("cannot write '" + json_path + "'");
    out << rep.json() << "\n";
    std::cout << rep.text();
}

Subspace parse_ideal_spec(const LieAlgebra& L, const std::string& spec) {
    std::vector<Vec> rows;
    if (spec.find(' ') == std::string::npos && spec.find(';') == std::string::npos) {
        // comma-separated basis labels: "x2,x3"
        std::istringstream ss(spec);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto idx = L.label_index(name);
            if (!idx) throw ParseError("unknown basis label '" + name + "' in --ideal");
            rows.push_back(unit_vec(L.dim(), *idx, L.field()));
        }
    } else {
        // semicolon-separated coordinate vectors: "1 0 0 0; 0 0 1 0"
        std::istringstream ss(spec);
        std::string row;
        while (std::getline(ss, row, ';')) {
            Vec v;
            std::istringstream rs(row);
            std::string tok;
            while (rs >> tok) v.push_back(Scalar::parse(L.field(), tok));
            if (v.size() != L.dim())
                throw ParseError("--ideal row has " + std::to_string(v.size()) +
                                 " entries, expected " + std::to_string(L.dim()));
            rows.push_back(v);
        }
    }
    return Subspace::span(L.dim(), L.field(), rows);
}

// scaling witness taking the left id's parameters to the right id's
std::optional<Scalar> iso_witness(const CatalogId& a, const CatalogId& b) {
    switch (a.family) {
        case Family::L4:
        case Family::M14:
            if (!a.params[0].is_zero() && !b.params[0].is_zero())
                return square_root(b.params[0] / a.params[0]);
            return std::nullopt;
        case Family::M7: {
            if (a.params[0].is_zero()) {
                if (a.params[1].is_zero() || b.params[1].is_zero()) return std::nullopt;
                return square_root(b.params[1] / a.params[1]);
            }
            return solve_scaling(b.params[0], b.params[1], a.params[0], a.params[1]);
        }
        case Family::M9: {
            if (a.field.characteristic() == 2) return std::nullopt;
            Scalar quarter = Scalar(a.field, 1) / Scalar(a.field, 4);
            return square_root((b.params[0] + quarter) / (a.params[0] + quarter));
        }
        default:
            return std::nullopt;
    }
}

int cmd_validate(const std::string& input, const std::string& json_path) {
    Report rep;
    rep.command = "validate " + input;
    LieAlgebra L = load_algebra(input);
    JacobiReport jr = validate(L);
    rep.add({"validate", input, jr.ok, "Jacobi identity holds", jr.str(), 0.0});
    emit(rep, json_path);
    return jr.ok ? kOk : kInvalidAlgebra;
}

int cmd_invariants(const std::string& input, bool ltilde, bool utilde, bool frobenius,
                   bool fp, const std::string& ideal_spec, const std::string& json_path) {
    Report rep;
    rep.command = "invariants " + input;
    LieAlgebra L = load_algebra(input);
    if (!ltilde && !utilde && !frobenius && !fp) fp = true;

    Subspace M = ideal_spec.empty() ? derived_subalgebra(L) : parse_ideal_spec(L, ideal_spec);

    if (fp) {
        Fingerprint f = fingerprint(L);
        rep.add({"invariants", "fingerprint", true, "", f.str(), 0.0});
    }
    if (ltilde) {
        LieAlgebra lt = build_Ltilde(L, M);
        rep.add({"invariants", "ltilde", true, "",
                 "dim " + std::to_string(lt.dim()) + ": " + lt.table_str(), 0.0});
    }
    if (utilde) {
        OperatorAlgebra U = build_Utilde(L, M);
        std::ostringstream os;
        if (auto pres = single_generator_presentation(L, M))
            os << "f = " << pres->second.str() << ", dim " << U.dim();
        else
            os << "dim " << U.dim() << " (no single-generator presentation)";
        rep.add({"invariants", "utilde", true, "", os.str(), 0.0});
    }
    if (frobenius) {
        FrobeniusData data = index_and_semiradical(L);
        std::ostringstream os;
        os << "index " << data.index << ", F(L)=" << data.semiradical.str();
        if (data.witness) {
            os << ", witness (";
            for (std::size_t i = 0; i < data.witness->size(); ++i) {
                if (i) os << ",";
                os << (*data.witness)[i].coeff_str();
            }
            os << ") of rank " << data.witness_rank;
        }
        rep.add({"invariants", "frobenius", true, "", os.str(), 0.0});
    }
    emit(rep, json_path);
    return kOk;
}

int cmd_compare(const std::string& left, const std::string& right,
                const std::string& json_path) {
    Report rep;
    rep.command = "compare " + left + " " + right;
    LieAlgebra L = load_algebra(left);
    LieAlgebra H = load_algebra(right);
    if (L.field() != H.field())
        throw PreconditionError("MixedFields: inputs over different fields");

    std::optional<CatalogId> idL, idH;
    try {
        if (L.provenance()) idL = CatalogId::parse(*L.provenance());
        if (H.provenance()) idH = CatalogId::parse(*H.provenance());
    } catch (const ParseError&) {
    }

    // literally identical inputs have nothing to decide; fall through to the
    // certificate, which reports inconclusive with all steps equal
    if (idL && idH && !(*idL == *idH) && idL->family == idH->family) {
        IsoResult iso = iso_within_family(*idL, *idH);
        if (iso == IsoResult::Isomorphic) {
            std::ostringstream os;
            os << "isomorphic";
            if (auto alpha = iso_witness(*idL, *idH)) os << " (alpha = " << alpha->str() << ")";
            rep.add({"compare", "within_family", true, "", os.str(), 0.0});
            emit(rep, json_path);
            return kOk;
        }
    }

    Certificate cert = certify_distinct_U(L, H);
    rep.add({"compare", "certificate", cert.distinct(), "distinct_U",
             cert.distinct() ? "distinct_U" : "inconclusive", 0.0});
    if (json_path.empty() || json_path == "-") {
        if (json_path.empty()) std::cout << cert.str();
        else std::cout << cert.json() << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) throw ParseError("cannot write '" + json_path + "'");
        out << cert.json() << "\n";
        std::cout << cert.str();
    }
    return cert.distinct() ? kOk : kInconclusive;
}

int cmd_paper_repro(const std::string& grid_spec, unsigned long seed, unsigned jobs,
                    bool skip_properties, const std::string& json_path) {
    ReproOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.properties = !skip_properties;
    if (!grid_spec.empty()) {
        std::istringstream ss(grid_spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            opts.grid.push_back(Scalar::parse(FieldTag::rationals(), tok));
    }
    Report rep = paper_repro(opts);
    emit(rep, json_path);
    return rep.all_pass() ? kOk : kInvalidAlgebra;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact isomorphism invariants of universal enveloping algebras"};
    app.require_subcommand(1);

    std::string input, right, json_path, ideal_spec, grid_spec;
    bool ltilde = false, utilde = false, frobenius = false, fp = false;
    bool skip_properties = false;
    unsigned long seed = 0;
    unsigned jobs = 1;

    auto* v = app.add_subcommand("validate", "check the Jacobi identity");
    v->add_option("input", input, "catalog id or structure-constant file")->required();
    v->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");

    auto* inv = app.add_subcommand("invariants", "invariant algebras and Frobenius data");
    inv->add_option("input", input)->required();
    inv->add_flag("--ltilde", ltilde, "the invariant Lie algebra for the chosen ideal");
    inv->add_flag("--utilde", utilde, "the invariant associative algebra");
    inv->add_flag("--frobenius", frobenius, "index and Frobenius semiradical");
    inv->add_flag("--fingerprint", fp, "full fingerprint (default)");
    inv->add_option("--ideal", ideal_spec,
                    "abelian ideal: labels 'x2,x3' or rows '0 1 0 0;0 0 1 0' (default L')");
    inv->add_option("--json", json_path);

    auto* cmp = app.add_subcommand("compare", "certify that U(L) and U(H) differ");
    cmp->add_option("left", input)->required();
    cmp->add_option("right", right)->required();
    cmp->add_option("--json", json_path);

    auto* pr = app.add_subcommand("paper-repro", "reproduce the published computations");
    pr->add_option("--grid", grid_spec, "comma-separated rational parameters");
    pr->add_option("--seed", seed, "seed for the randomized property suites");
    pr->add_option("--jobs", jobs, "parallel workers for independent pairs");
    pr->add_flag("--skip-properties", skip_properties, "omit the randomized suites");
    pr->add_option("--json", json_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return cmd_validate(input, json_path);
        if (inv->parsed())
            return cmd_invariants(input, ltilde, utilde, frobenius, fp, ideal_spec,
                                  json_path);
        if (cmp->parsed()) return cmd_compare(input, right, json_path);
        if (pr->parsed())
            return cmd_paper_repro(grid_spec, seed, jobs, skip_properties, json_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidAlgebraError& e) {
        std::cerr << "invalid algebra: " << e.what() << "\n";
        return kInvalidAlgebra;
    } catch (const CharacteristicError& e) {
        std::cerr << "characteristic restriction: " << e.what() << "\n";
        return kCharacteristic;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}

// schub: exact Schubert polynomial calculator.
//
// Subcommands: expand, eval, skew-expand, skew-eval, interp, lr, ks.
// Exit codes: 0 success, 1 usage error, 2 promise or contract violation.

#include "CLI11.hpp"

#include "schub/code.hpp"
#include "schub/expansion.hpp"
#include "schub/interpolate.hpp"
#include "schub/lr.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"
#include "schub/skew.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

schub::Point parse_point(const std::string& text)
{
    schub::Point point;
    if (text.empty())
        return point;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        point.emplace_back(item);  // mpz_class rejects malformed decimals
    return point;
}

schub::Rat parse_rational(const std::string& text)
{
    schub::Rat q(text);  // accepts "num" and "num/den"
    q.canonicalize();
    return q;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write file: " + out_path);
    out << text << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Schubert / skew Schubert polynomial calculator with "
                 "deterministic sparse interpolation"};
    app.require_subcommand(1);

    std::string code_text, point_text, u_text, v_text, w_text;
    std::string method = "transition", basis_name, poly_path, out_path, eps_text = "1/3";
    long m_flag = -1, d_flag = -1, n_flag = -1;

    CLI::App* cmd_expand = app.add_subcommand("expand", "Expand a Schubert polynomial");
    cmd_expand->add_option("--code", code_text, "Code of the polynomial, e.g. 2,0,3")
        ->required();
    cmd_expand->add_option("--method", method, "transition (default) or dd")
        ->check(CLI::IsMember({"transition", "dd"}));
    cmd_expand->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate a Schubert polynomial");
    cmd_eval->add_option("--code", code_text, "Code of the polynomial")->required();
    cmd_eval->add_option("--point", point_text, "Nonnegative coordinates, e.g. 5,7")
        ->required();
    cmd_eval->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_skew_expand =
        app.add_subcommand("skew-expand", "Expand a skew Schubert polynomial");
    cmd_skew_expand->add_option("--v", v_text, "Lower code (may be empty)");
    cmd_skew_expand->add_option("--w", w_text, "Upper code")->required();
    cmd_skew_expand->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_skew_eval =
        app.add_subcommand("skew-eval", "Evaluate a skew Schubert polynomial");
    cmd_skew_eval->add_option("--v", v_text, "Lower code (may be empty)");
    cmd_skew_eval->add_option("--w", w_text, "Upper code")->required();
    cmd_skew_eval->add_option("--point", point_text, "Coordinates")->required();
    cmd_skew_eval->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_interp =
        app.add_subcommand("interp", "Sparse interpolation of a polynomial file");
    cmd_interp->add_option("--poly", poly_path, "Black box: polynomial JSON file")
        ->required();
    cmd_interp->add_option("--basis", basis_name, "monomial, schur or schubert")
        ->check(CLI::IsMember({"monomial", "schur", "schubert"}))
        ->required();
    cmd_interp->add_option("--d", d_flag, "Promised total degree bound")->required();
    cmd_interp->add_option("--m", m_flag, "Promised sparsity bound")->required();
    cmd_interp->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_lr = app.add_subcommand("lr", "Expand a product of two Schubert polynomials");
    cmd_lr->add_option("--u", u_text, "Code of the first factor");
    cmd_lr->add_option("--v", v_text, "Code of the second factor");
    cmd_lr->add_option("--m", m_flag,
                       "Term bound for interpolation (default: counted via the "
                       "triangular oracle)");
    cmd_lr->add_option("--out", out_path, "Write the result to a file");

    CLI::App* cmd_ks = app.add_subcommand("ks", "Print a Klivans-Spielman vector set");
    cmd_ks->add_option("--m", m_flag, "Sparsity parameter")->required();
    cmd_ks->add_option("--n", n_flag, "Number of variables")->required();
    cmd_ks->add_option("--d", d_flag, "Degree parameter")->required();
    cmd_ks->add_option("--eps", eps_text, "Failure budget, a rational such as 1/3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_expand)) {
            const schub::Code v = schub::Code::parse(code_text);
            const schub::SparsePolynomial poly = method == "dd"
                                                     ? schub::schubert_expand_dd(v)
                                                     : schub::schubert_expand_transition(v);
            emit(poly.to_json(), out_path);
        } else if (app.got_subcommand(cmd_eval)) {
            const schub::Code v = schub::Code::parse(code_text);
            const schub::Int value = schub::schubert_eval(v, parse_point(point_text));
            emit(schub::to_decimal(value), out_path);
        } else if (app.got_subcommand(cmd_skew_expand)) {
            const schub::Code v = schub::Code::parse(v_text);
            const schub::Code w = schub::Code::parse(w_text);
            emit(schub::skew_expand(v, w).to_json(), out_path);
        } else if (app.got_subcommand(cmd_skew_eval)) {
            const schub::Code v = schub::Code::parse(v_text);
            const schub::Code w = schub::Code::parse(w_text);
            const schub::Int value = schub::skew_eval(v, w, parse_point(point_text));
            emit(schub::to_decimal(value), out_path);
        } else if (app.got_subcommand(cmd_interp)) {
            schub::SparsePolynomial poly = schub::SparsePolynomial::from_json(slurp(poly_path));
            if (poly.nvars() == 0)
                poly = poly.extended(1);
            const int n = poly.nvars();
            schub::BlackBox bb;
            bb.nvars = n;
            bb.eval = [&poly](const schub::Point& a) { return poly.evaluate(a); };
            schub::BasisDescriptor basis;
            if (basis_name == "monomial")
                basis = schub::monomial_basis(n);
            else if (basis_name == "schur")
                basis = schub::schur_basis(n);
            else
                basis = schub::schubert_basis(n);
            if (d_flag < 0 || m_flag < 0)
                throw std::invalid_argument("--d and --m must be nonnegative");
            emit(schub::interpolate(bb, basis, n, d_flag, m_flag).to_json(), out_path);
        } else if (app.got_subcommand(cmd_lr)) {
            const schub::Code u = schub::Code::parse(u_text);
            const schub::Code v = schub::Code::parse(v_text);
            long m = m_flag;
            if (m < 0)
                m = static_cast<long>(schub::lr_oracle_triangular(u, v).terms.size());
            emit(schub::lr_expand_product(u, v, m).to_json(), out_path);
        } else if (app.got_subcommand(cmd_ks)) {
            const schub::KSSet ks =
                schub::ks_set(m_flag, static_cast<int>(n_flag), parse_rational(eps_text), d_flag);
            nlohmann::ordered_json j;
            j["m"] = ks.m;
            j["n"] = ks.n;
            j["epsilon"] = ks.epsilon.get_str();
            j["d"] = ks.d_param;
            j["t"] = ks.t;
            j["p"] = schub::to_decimal(ks.p);
            j["vectors"] = ks.vectors;
            emit(j.dump(), out_path);
        }
        return 0;
    } catch (const schub::promise_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

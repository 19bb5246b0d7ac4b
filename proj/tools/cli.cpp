#include "cli.hpp"

#include <exception>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "qvlab/errors.hpp"
#include "qvlab/orders.hpp"
#include "qvlab/problem.hpp"
#include "qvlab/quasival.hpp"
#include "qvlab/stability.hpp"
#include "qvlab/text.hpp"

namespace qvlab::cli {

namespace {

struct Options {
    std::string file;
    std::string basis;
    std::string ideal;
    std::string element;
    std::string expr;
    std::size_t rank = 1;
    std::size_t samples = 200;
    std::uint64_t seed = 42;
    int jobs = 1;
    std::size_t steps = 4;
    std::size_t n = 2;
    std::string domain = "Z";
    long p = 2;
    std::string ideals;
};

Exec exec_of(Options const& o)
{
    if (o.jobs > 1) {
        omp_set_num_threads(o.jobs);
        return Exec::parallel;
    }
    return Exec::serial;
}

SampleSpec sample_spec(Options const& o)
{
    SampleSpec s;
    s.count = o.samples;
    s.seed = o.seed;
    return s;
}

template <ExactField F>
Vec<F> coords_from_text(std::string const& text);
template <>
Vec<Rational> coords_from_text<Rational>(std::string const& text)
{
    return parse_rational_coords(text);
}
template <>
Vec<RatFunc> coords_from_text<RatFunc>(std::string const& text)
{
    return parse_ratfunc_coords(text);
}

template <ExactField F>
std::vector<Vec<F>> const& chosen_basis(Problem<F> const& p, std::string const& name)
{
    if (!name.empty())
        return p.basis(name);
    if (p.bases.empty())
        throw parse_error("problem file has no named bases");
    return p.bases.front().second;
}

template <ExactField F>
void require_valid(Problem<F> const& p)
{
    auto r = p.algebra.check_associative_unital();
    if (!r.ok)
        throw structural_error("algebra is not associative and unital: " + r.message);
}

void print_rows(std::ostream& out, std::string const& label, auto const& rows)
{
    out << label << ":\n";
    for (auto const& r : rows)
        out << "  " << to_string(r) << "\n";
}

template <ExactField F>
SubringOracle<F> order_of(Problem<F> const& p, std::string const& basis)
{
    return left_order(p.algebra, LatticeModule<F>(p.domain, chosen_basis(p, basis)));
}

template <ExactField F>
int cmd_algebra_check(Problem<F> const& p, std::ostream& out)
{
    auto r = p.algebra.check_associative_unital();
    if (!r.ok) {
        out << "FAIL: " << r.message << "\n";
        return exit_failed;
    }
    out << "OK: associative, unital (n=" << p.algebra.dim() << ")\n";
    return exit_ok;
}

template <ExactField F>
int cmd_stable(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto cert = stabilizer_finite(p.algebra, chosen_basis(p, o.basis), p.domain);
    auto rep = is_stable(p.algebra, cert, p.domain);
    out << "stable basis certificate over " << p.domain.name() << "\n";
    print_rows(out, "basis", cert.basis);
    print_rows(out, "stabilizer", cert.stabilizer);
    out << "products checked: " << rep.products_checked << "\n";
    for (auto const& v : rep.violations)
        out << "  witness: c" << v.stabilizer_index << " * b" << v.basis_index << " has coordinate " << v.coordinate
            << " = " << v.value << " outside " << p.domain.name() << "\n";
    out << (rep.ok ? "OK: basis is stable\n" : "FAIL: basis is not stable\n");
    return rep.ok ? exit_ok : exit_failed;
}

template <ExactField F>
int cmd_nice(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto R = order_of(p, o.basis);
    if (R.lattice_basis())
        print_rows(out, "left order lattice basis", *R.lattice_basis());
    else
        print_rows(out, "left order contains", R.contained_basis());
    auto rep = verify_nice(p.algebra, R, sample_spec(o), exec_of(o));
    out << rep.to_text();
    return rep.passed() ? exit_ok : exit_failed;
}

template <ExactField F>
int cmd_qv_eval(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto R = order_of(p, o.basis);
    auto Q = FilterQV<F>::from_order(p.algebra, R);
    auto x = coords_from_text<F>(o.element);
    p.algebra.require_element(x);
    out << to_string(Q.eval(x)) << "\n";
    return exit_ok;
}

template <ExactField F>
std::vector<std::pair<Vec<F>, Vec<F>>> basis_pairs(std::vector<Vec<F>> const& basis)
{
    std::vector<std::pair<Vec<F>, Vec<F>>> out;
    for (auto const& a : basis)
        for (auto const& b : basis)
            out.emplace_back(a, b);
    return out;
}

template <ExactField F>
int cmd_qv_audit(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto R = order_of(p, o.basis);
    auto Q = FilterQV<F>::from_order(p.algebra, R);
    auto rep = qv_audit(Q, R, AuditSpec::uniform(o.samples, o.seed), basis_pairs(Q.order_basis()), exec_of(o));
    out << rep.to_text();
    return rep.passed() ? exit_ok : exit_failed;
}

template <ExactField F>
int cmd_chain(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto cert = stabilizer_finite(p.algebra, chosen_basis(p, o.basis), p.domain);
    auto chain = descend_chain(p.algebra, cert, p.domain, o.steps);
    auto spec = sample_spec(o);
    bool ok = true;
    out << "descending chain over " << p.domain.name() << ", " << o.steps << " steps\n";
    std::optional<FilterQV<F>> prev;
    if (p.domain.valuation_like())
        prev = FilterQV<F>::from_order(p.algebra, chain.terms.front());
    SplitMix64 rng(o.seed);
    for (std::size_t i = 0; i < chain.terms.size(); ++i) {
        auto const& term = chain.terms[i];
        auto rep = verify_nice(p.algebra, term, spec, exec_of(o));
        out << "term " << i << ": " << term.provenance() << ": nice " << (rep.passed() ? "PASS" : "FAIL") << "\n";
        if (!rep.passed()) {
            out << rep.to_text();
            ok = false;
        }
        if (i == 0)
            continue;
        auto const& y = chain.witnesses[i - 1];
        bool strict = chain.terms[i - 1].contains(y) && !term.contains(y);
        out << "  witness " << to_string(y) << ": in term " << i - 1 << ", not in term " << i << ": "
            << (strict ? "confirmed" : "FAILED") << "\n";
        ok = ok && strict;
        if (prev) {
            auto Q = FilterQV<F>::from_order(p.algebra, term);
            std::vector<Vec<F>> xs{y};
            for (std::size_t k = 0; k < o.samples; ++k)
                xs.push_back(k % 2 ? detail::random_element(p.algebra, p.domain, rng, spec)
                                   : detail::random_member(term.contained_basis(), p.domain, rng, spec));
            auto cmp = qv_compare(Q, *prev, xs);
            bool mono = cmp.above.empty() && !cmp.below.empty();
            out << "  evaluators: W" << i << " vs W" << i - 1 << ": " << to_string(cmp.verdict) << " on " << xs.size()
                << " samples";
            if (!cmp.below.empty())
                out << ", strict at " << to_string(cmp.below.front()) << " (" << to_string(Q.eval(cmp.below.front()))
                    << " < " << to_string(prev->eval(cmp.below.front())) << ")";
            out << "\n";
            if (!cmp.above.empty())
                out << "  witness: W" << i << " exceeds W" << i - 1 << " at " << to_string(cmp.above.front()) << "\n";
            ok = ok && mono;
            prev = std::move(Q);
        }
    }
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_failed;
}

template <ExactField F>
int cmd_ideal_nice(Problem<F> const& p, Options const& o, std::ostream& out)
{
    require_valid(p);
    auto const& I = p.ideal(o.ideal);
    auto R = nice_with_ideal(p.algebra, I, p.domain);
    print_rows(out, "ideal generators", I);
    print_rows(out, "contained basis", R.contained_basis());
    bool ok = true;
    for (auto const& g : I)
        for (auto const& q : {F::one(), F::one() / p.domain.noninvertible()}) {
            auto x = scale(q, g);
            if (!R.contains(x)) {
                out << "  witness: ideal element " << to_string(x) << " is not in R\n";
                ok = false;
            }
        }
    out << "contains ideal: " << (ok ? "PASS" : "FAIL") << "\n";
    auto rep = verify_nice(p.algebra, R, sample_spec(o), exec_of(o));
    out << rep.to_text();
    return ok && rep.passed() ? exit_ok : exit_failed;
}

int cmd_matrix_chain(Options const& o, std::ostream& out)
{
    BaseDomain<Rational> C = o.domain == "Z" ? BaseDomain<Rational>::integers()
                             : o.domain == "Zp" ? BaseDomain<Rational>::local(o.p)
                             : o.domain == "Ov" ? BaseDomain<Rational>::valuation_ring(PadicValuation(o.p))
                                                : throw config_error("unknown domain '" + o.domain + "'");
    std::vector<Rational> gens;
    for (auto part : split(o.ideals, ','))
        gens.push_back(parse_rational(part));
    auto chain = matrix_nice_chain(C, gens, o.n);
    auto alg = matrix_algebra<Rational>(o.n);
    bool ok = true;
    out << "matrix chain in M" << o.n << " over " << C.name() << "\n";
    for (std::size_t k = 0; k < chain.terms.size(); ++k) {
        auto rep = verify_nice(alg, chain.terms[k], sample_spec(o), exec_of(o));
        out << "term " << k << ": " << chain.terms[k].provenance() << ": nice " << (rep.passed() ? "PASS" : "FAIL")
            << "\n";
        if (!rep.passed()) {
            out << rep.to_text();
            ok = false;
        }
    }
    for (std::size_t k = 0; k < chain.witnesses.size(); ++k) {
        auto const& w = chain.witnesses[k];
        bool strict = chain.terms[k + 1].contains(w) && !chain.terms[k].contains(w);
        out << "witness " << to_string(w) << ": in term " << k + 1 << ", not in term " << k << ": "
            << (strict ? "confirmed" : "FAILED") << "\n";
        ok = ok && strict;
    }
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_failed;
}

template <class Fn>
int with_problem(std::string const& file, Fn&& fn)
{
    auto p = load_problem(file);
    return std::visit([&](auto const& pr) { return fn(pr); }, p);
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"exact cut-monoid arithmetic, nice subalgebras and filter quasi-valuations", "qvlab"};
    app.require_subcommand(1);

    auto add_sampling = [&o](CLI::App* c) {
        c->add_option("--samples", o.samples, "number of random samples")->capture_default_str();
        c->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
        c->add_option("--jobs", o.jobs, "threads for sample checks (1 = serial)")->capture_default_str();
    };

    auto* cutcalc = app.add_subcommand("cutcalc", "evaluate a cut expression");
    cutcalc->add_option("expr", o.expr, "expression, e.g. \"AM(1;2) + AM(0;1,7)\"")->required();
    cutcalc->add_option("--rank", o.rank, "rank when the expression does not fix it")->capture_default_str();

    auto* algebra = app.add_subcommand("algebra", "algebra operations");
    algebra->require_subcommand(1);
    auto* check = algebra->add_subcommand("check", "check associativity and the unit");
    check->add_option("file", o.file)->required()->check(CLI::ExistingFile);

    auto* stable = app.add_subcommand("stable", "build and check a stabilizer for a basis");
    stable->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    stable->add_option("--basis", o.basis, "named basis")->required();

    auto* nice = app.add_subcommand("nice", "left order of a basis lattice and its nice audit");
    nice->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    nice->add_option("--basis", o.basis, "named basis")->required();
    add_sampling(nice);

    auto* qv = app.add_subcommand("qv", "filter quasi-valuations");
    qv->require_subcommand(1);
    auto* eval = qv->add_subcommand("eval", "evaluate W at an element");
    eval->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    eval->add_option("--basis", o.basis, "named basis")->required();
    eval->add_option("--element", o.element, "coordinates, e.g. \"1/2,0,0,4\"")->required();
    auto* audit = qv->add_subcommand("audit", "audit the quasi-valuation axioms");
    audit->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    audit->add_option("--basis", o.basis, "named basis")->required();
    add_sampling(audit);

    auto* chain = app.add_subcommand("chain", "chains of nice subalgebras");
    chain->require_subcommand(1);
    auto* descend = chain->add_subcommand("descend", "strictly descending chain");
    descend->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    descend->add_option("--steps", o.steps, "chain length")->capture_default_str();
    descend->add_option("--basis", o.basis, "named basis (default: first)");
    add_sampling(descend);

    auto* ideal = app.add_subcommand("ideal-nice", "nice subalgebra containing an ideal");
    ideal->add_option("file", o.file)->required()->check(CLI::ExistingFile);
    ideal->add_option("--ideal", o.ideal, "named ideal")->required();
    add_sampling(ideal);

    auto* mchain = app.add_subcommand("matrix-chain", "ascending chain of nice subalgebras of M_n");
    mchain->add_option("--n", o.n, "matrix size")->capture_default_str();
    mchain->add_option("--domain", o.domain, "Z, Zp or Ov")->capture_default_str();
    mchain->add_option("--p", o.p, "prime for Zp and Ov")->capture_default_str();
    mchain->add_option("--ideals", o.ideals, "generators, largest ideal last, e.g. 4,2")->required();
    add_sampling(mchain);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*cutcalc) {
            out << eval_cut_expression(o.expr, o.rank) << "\n";
            return exit_ok;
        }
        if (*mchain)
            return cmd_matrix_chain(o, out);
        return with_problem(o.file, [&](auto const& p) {
            if (*check)
                return cmd_algebra_check(p, out);
            if (*stable)
                return cmd_stable(p, o, out);
            if (*nice)
                return cmd_nice(p, o, out);
            if (*eval)
                return cmd_qv_eval(p, o, out);
            if (*audit)
                return cmd_qv_audit(p, o, out);
            if (*descend)
                return cmd_chain(p, o, out);
            return cmd_ideal_nice(p, o, out);
        });
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace qvlab::cli

#include "contactkit/parse.hpp"
#include "contactkit/print.hpp"
#include "contactkit/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace contactkit;
using cli::print_canonical;

namespace {

constexpr const char *kUsage = R"(contactkit — exact contact-geometry kernel on the Darboux model of R^{2n+1}

usage: contactkit [--format=json] <command> [flags]

commands:
  xh        -n N -H EXPR            contact field X_H of a Hamiltonian
  bracket   -n N -H1 EXPR -H2 EXPR  Lagrange bracket {H1,H2}
  decompose -n N -X FIELD           split X into X_H + tangent part
  pair      -n N -X FIELD -Y FIELD  pairing H_{X,Y} of tangent fields
  act       -n N -H EXPR -F EXPRS -G EXPRS
                                    matrix action of X_H on frame coords
  realize   -n N -X FIELD           2-form (x) density realization
  reeb      -n N [-f EXPR]          Reeb field of f*alpha (default alpha)
  lieder    -n N -H EXPR --weight P/Q -f EXPR
                                    Lie derivative of the density f*Omega^w
                                    along X_H
  check     --suite ID [--seed S] [--n N] [--trials T]
                                    run a randomized identity suite

Expressions use variables x1..xn, y1..yn, z (x, y allowed when n = 1);
field literals are [c_1, ..., c_{2n+1}] over (d/dx_i, d/dy_i, d/dz).
Rescaling functions and Hamiltonians passed to reeb/lieder/check must be
formally nonzero; identities are verified in the fraction field.
CONTACTKIT_SEED sets the default seed of `check`.

exit status: 0 success, 1 domain error, 2 syntax/usage error.
)";

struct Args
{
	std::string command;
	std::map<std::string, std::string> flags;
	bool json_output = false;
};

int usage_error(const std::string &msg)
{
	std::cerr << "error: " << msg << "\n" << kUsage;
	return 2;
}

Args parse_args(int argc, char **argv)
{
	Args args;
	std::vector<std::string> tokens(argv + 1, argv + argc);
	std::vector<std::string> rest;
	for (std::size_t i = 0; i < tokens.size(); ++i) {
		if (tokens[i] == "--format=json") {
			args.json_output = true;
		} else if (tokens[i] == "--format") {
			if (i + 1 >= tokens.size())
				throw Error("Usage", "--format needs a value");
			if (tokens[++i] != "json" && tokens[i] != "text")
				throw Error("Usage", "unknown format '" + tokens[i] + "'");
			args.json_output = tokens[i] == "json";
		} else {
			rest.push_back(tokens[i]);
		}
	}
	if (rest.empty())
		throw Error("Usage", "missing command");
	args.command = rest[0];
	for (std::size_t i = 1; i < rest.size(); ++i) {
		std::string key = rest[i];
		if (key.empty() || key[0] != '-')
			throw Error("Usage", "expected a flag, got '" + key + "'");
		key.erase(0, key.find_first_not_of('-'));
		auto eq = key.find('=');
		if (eq != std::string::npos) {
			args.flags[key.substr(0, eq)] = key.substr(eq + 1);
			continue;
		}
		if (i + 1 >= rest.size())
			throw Error("Usage", "flag -" + key + " needs a value");
		args.flags[key] = rest[++i];
	}
	return args;
}

const std::string &require(const Args &args, const std::string &key)
{
	auto it = args.flags.find(key);
	if (it == args.flags.end())
		throw Error("Usage", "missing flag -" + key);
	return it->second;
}

std::optional<std::string> optional_flag(const Args &args,
                                         const std::string &key)
{
	auto it = args.flags.find(key);
	if (it == args.flags.end())
		return std::nullopt;
	return it->second;
}

int parse_int(const std::string &text, const std::string &what)
{
	try {
		std::size_t used = 0;
		int v = std::stoi(text, &used);
		if (used != text.size())
			throw std::invalid_argument(text);
		return v;
	} catch (const std::exception &) {
		throw Error("Usage", "invalid integer for " + what + ": '" + text +
		                         "'");
	}
}

std::uint64_t parse_seed(const std::string &text)
{
	// stoull silently wraps negative input, so reject signs up front
	if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0])))
		throw Error("Usage", "invalid seed '" + text + "'");
	try {
		std::size_t used = 0;
		std::uint64_t v = std::stoull(text, &used);
		if (used != text.size())
			throw std::invalid_argument(text);
		return v;
	} catch (const std::exception &) {
		throw Error("Usage", "invalid seed '" + text + "'");
	}
}

int model_dim(const Args &args)
{
	int n = parse_int(require(args, "n"), "-n");
	if (n < 1)
		throw Error("Usage", "-n must be at least 1");
	return n;
}

void emit_value(const Args &args, const std::string &kind, int n,
                const std::string &canonical)
{
	if (args.json_output) {
		json j{{"kind", kind}, {"n", n}, {"canonical", canonical}};
		std::cout << j.dump() << "\n";
	} else {
		std::cout << canonical << "\n";
	}
}

int cmd_xh(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	RatFn h = cli::parse_ratfn(require(args, "H"), n);
	emit_value(args, "vector_field", n,
	           print_canonical(hamiltonian_to_field(m, h)));
	return 0;
}

int cmd_bracket(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	RatFn h1 = cli::parse_ratfn(require(args, "H1"), n);
	RatFn h2 = cli::parse_ratfn(require(args, "H2"), n);
	emit_value(args, "hamiltonian", n,
	           print_canonical(lagrange_bracket(m, h1, h2)));
	return 0;
}

int cmd_decompose(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	VectorField x = cli::parse_field(require(args, "X"), n);
	auto [h, y] = decompose(m, x);
	if (args.json_output) {
		json j{{"kind", "decomposition"},
		       {"n", n},
		       {"hamiltonian", print_canonical(h)},
		       {"tangent", print_canonical(y)}};
		std::cout << j.dump() << "\n";
	} else {
		std::cout << "H: " << print_canonical(h) << "\n"
		          << "Y: " << print_canonical(y) << "\n";
	}
	return 0;
}

int cmd_pair(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	VectorField x = cli::parse_field(require(args, "X"), n);
	VectorField y = cli::parse_field(require(args, "Y"), n);
	emit_value(args, "hamiltonian", n, print_canonical(pairing(m, x, y)));
	return 0;
}

int cmd_act(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	RatFn h = cli::parse_ratfn(require(args, "H"), n);
	TangentCoords t;
	t.F = cli::parse_expr_list(require(args, "F"), n, n);
	t.G = cli::parse_expr_list(require(args, "G"), n, n);
	TangentCoords r = matrix_action(m, h, t);
	auto render = [](const std::vector<RatFn> &v) {
		std::string s = "[";
		for (std::size_t i = 0; i < v.size(); ++i) {
			if (i)
				s += ", ";
			s += print_canonical(v[i]);
		}
		return s + "]";
	};
	if (args.json_output) {
		json jf = json::array(), jg = json::array();
		for (const auto &f : r.F)
			jf.push_back(print_canonical(f));
		for (const auto &g : r.G)
			jg.push_back(print_canonical(g));
		json j{{"kind", "tangent_coords"}, {"n", n}, {"F", jf}, {"G", jg}};
		std::cout << j.dump() << "\n";
	} else {
		std::cout << "F: " << render(r.F) << "\n"
		          << "G: " << render(r.G) << "\n";
	}
	return 0;
}

int cmd_realize(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	VectorField x = cli::parse_field(require(args, "X"), n);
	RealizedTangent r = realize_tangent(m, x);
	if (args.json_output) {
		json j{{"kind", "realized_tangent"},
		       {"n", n},
		       {"form", print_canonical(r.two_form)},
		       {"density", print_canonical(r.weight_part)}};
		std::cout << j.dump() << "\n";
	} else {
		std::cout << "form: " << print_canonical(r.two_form) << "\n"
		          << "density: " << print_canonical(r.weight_part) << "\n";
	}
	return 0;
}

int cmd_reeb(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	DiffForm alpha_p = m.alpha();
	if (auto f = optional_flag(args, "f"))
		alpha_p = m.alpha().scaled(cli::parse_ratfn(*f, n));
	emit_value(args, "vector_field", n,
	           print_canonical(reeb_of(m, alpha_p)));
	return 0;
}

int cmd_lieder(const Args &args)
{
	int n = model_dim(args);
	DarbouxModel m(n);
	RatFn h = cli::parse_ratfn(require(args, "H"), n);
	RatFn f = cli::parse_ratfn(require(args, "f"), n);
	Rat weight = Rat::parse(require(args, "weight"));
	Density result =
	    density_lie(m, hamiltonian_to_field(m, h), Density(f, weight));
	emit_value(args, "density", n, print_canonical(result));
	return 0;
}

int cmd_check(const Args &args)
{
	verify::GenConfig cfg;
	cfg.n = args.flags.count("n") ? parse_int(args.flags.at("n"), "--n") : 1;
	if (cfg.n < 1)
		throw Error("Usage", "--n must be at least 1");
	if (const char *env = std::getenv("CONTACTKIT_SEED"))
		cfg.seed = parse_seed(env);
	if (auto s = optional_flag(args, "seed"))
		cfg.seed = parse_seed(*s);
	int trials = args.flags.count("trials")
	                 ? parse_int(args.flags.at("trials"), "--trials")
	                 : 100;
	const std::string &suite = require(args, "suite");
	verify::SuiteReport report = verify::run_suite(suite, cfg, trials);

	std::map<int, const verify::TrialFailure *> failed;
	for (const auto &f : report.failures)
		failed[f.trial] = &f;
	for (int t = 0; t < report.trials; ++t) {
		std::uint64_t seed = verify::trial_seed(cfg.seed, suite, t);
		bool ok = !failed.count(t);
		if (args.json_output) {
			json j{{"suite", suite},
			       {"trial", t},
			       {"status", ok ? "ok" : "fail"},
			       {"seed", seed}};
			if (!ok)
				j["message"] = failed[t]->message;
			std::cout << j.dump() << "\n";
		} else {
			std::cout << suite << " " << t << " " << (ok ? "ok" : "fail")
			          << " " << seed << "\n";
		}
	}
	std::cerr << "suite " << suite << ": " << report.trials << " trials, "
	          << report.failures.size() << " failures, "
	          << report.elapsed_seconds << "s\n";
	return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	Args args;
	try {
		args = parse_args(argc, argv);
	} catch (const Error &e) {
		return usage_error(e.what());
	}
	try {
		if (args.command == "xh")
			return cmd_xh(args);
		if (args.command == "bracket")
			return cmd_bracket(args);
		if (args.command == "decompose")
			return cmd_decompose(args);
		if (args.command == "pair")
			return cmd_pair(args);
		if (args.command == "act")
			return cmd_act(args);
		if (args.command == "realize")
			return cmd_realize(args);
		if (args.command == "reeb")
			return cmd_reeb(args);
		if (args.command == "lieder")
			return cmd_lieder(args);
		if (args.command == "check")
			return cmd_check(args);
		if (args.command == "help" || args.command == "-h" ||
		    args.command == "--help") {
			std::cout << kUsage;
			return 0;
		}
		return usage_error("unknown command '" + args.command + "'");
	} catch (const Error &e) {
		std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
		bool syntax = e.kind() == "SyntaxError" ||
		              e.kind() == "UnknownVariable" || e.kind() == "Usage";
		return syntax ? 2 : 1;
	} catch (const std::exception &e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 1;
	}
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pgk/cli.hpp"
#include "pgk/cnf.hpp"
#include "pgk/graph.hpp"
#include "pgk/instance.hpp"

using namespace pgk;
namespace fs = std::filesystem;

namespace {

// run_cli writes results to stdout; capture it per invocation
struct Run {
	int code;
	std::string out;
};

Run cli(const std::vector<std::string>& args) {
	std::stringstream captured;
	std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
	int code = -1;
	try {
		code = run_cli(args);
	} catch (...) {
		std::cout.rdbuf(old);
		throw;
	}
	std::cout.rdbuf(old);
	return {code, captured.str()};
}

fs::path scratch() {
	static const fs::path dir = [] {
		fs::path d = fs::temp_directory_path() / "pgk-cli-tests";
		fs::create_directories(d);
		return d;
	}();
	return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
	fs::path p = scratch() / name;
	std::ofstream out(p, std::ios::binary);
	out << content;
	return p.string();
}

std::string graph_file(const std::string& name, const Graph& g) {
	return write_file(name, to_dimacs(g));
}

}

TEST_CASE("params reports all four parameters") {
	std::string k5 = graph_file("k5.dimacs", complete_graph(5));

	auto text = cli({"params", k5});
	CHECK(text.code == 0);
	CHECK(text.out.find("vc = 4") != std::string::npos);
	CHECK(text.out.find("mw = 0") != std::string::npos);

	auto j = cli({"params", k5, "--json"});
	CHECK(j.code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("vc") == 4);
	CHECK(parsed.at("tc") == 0);
	CHECK(parsed.at("nd") == 1);
	CHECK(parsed.at("mw") == 0);
}

TEST_CASE("solve answers plainly and with a certificate") {
	std::string k5 = graph_file("k5b.dimacs", complete_graph(5));

	auto yes = cli({"solve", "clique", k5, "-k", "5"});
	CHECK(yes.code == 0);
	CHECK(yes.out == "yes\n");

	auto no = cli({"solve", "clique", k5, "-k", "6"});
	CHECK(no.code == 0);
	CHECK(no.out == "no\n");

	auto j = cli({"solve", "clique", k5, "-k", "5", "--json"});
	CHECK(j.code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("yes") == true);
	CHECK(parsed.at("witness").at("vertices").size() == 5);
}

TEST_CASE("solve reads instance files and dimacs conventions") {
	auto inst = graph_instance(ProblemKind::clique, complete_graph(3), 3);
	std::string path = write_file("inst.json", instance_to_json(inst).dump());
	auto ok = cli({"solve", "clique", path});
	CHECK(ok.code == 0);
	CHECK(ok.out == "yes\n");

	// the embedded kind wins over a mismatched command-line kind
	CHECK(cli({"solve", "vertex-cover", path}).code == 2);

	// plain graphs ask steiner questions with every vertex a terminal
	std::string p4 = graph_file("p4.dimacs", path_graph(4));
	auto span = cli({"solve", "steiner-tree", p4, "-k", "3"});
	CHECK(span.code == 0);
	CHECK(span.out == "yes\n");
	CHECK(cli({"solve", "steiner-tree", p4, "-k", "2"}).out == "no\n");

	// colored instances cannot come from bare DIMACS
	CHECK(cli({"solve", "multicolored-clique", p4, "-k", "1"}).code == 2);
}

TEST_CASE("solve failure modes") {
	std::string k5 = graph_file("k5c.dimacs", complete_graph(5));
	CHECK(cli({"solve", "no-such-kind", k5}).code == 2);
	CHECK(cli({"solve", "clique", (scratch() / "missing.dimacs").string()}).code == 2);

	std::string big = graph_file("k21.dimacs", complete_graph(21));
	CHECK(cli({"solve", "clique", big, "-k", "3"}).code == 2); // guardrail
}

TEST_CASE("usage errors exit with 2") {
	CHECK(cli({}).code == 2);
	CHECK(cli({"frobnicate"}).code == 2);
	std::string k5 = graph_file("k5d.dimacs", complete_graph(5));
	CHECK(cli({"kernelize", "no-such-kernel", k5}).code == 2);
	CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("kernelize collapses a clique") {
	std::string k5 = graph_file("k5e.dimacs", complete_graph(5));

	auto j = cli({"kernelize", "vc-tc", k5, "-k", "4", "--json"});
	CHECK(j.code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("immediate_no") == false);
	CHECK(parsed.at("k") == 0);
	CHECK(parsed.at("graph").at("n") == 0);

	auto no = cli({"kernelize", "vc-tc", k5, "-k", "3"});
	CHECK(no.code == 0);
	CHECK(no.out.find("no instance") != std::string::npos);

	CHECK(cli({"kernelize", "vc-tc", k5}).code == 2); // threshold required
}

TEST_CASE("kernelize emits certificates and honors given covers") {
	std::string k5 = graph_file("k5f.dimacs", complete_graph(5));
	std::string cert = (scratch() / "cert.json").string();

	auto r = cli({"kernelize", "vc-tc", k5, "-k", "4", "--tc-cert", cert});
	CHECK(r.code == 0);
	auto cj = nlohmann::json::parse(std::ifstream(cert));
	CHECK(cj.at("cover").empty());           // a clique needs no cover
	CHECK(cj.at("cliques").size() == 1);

	std::string p4 = graph_file("p4b.dimacs", path_graph(4));
	auto vc = cli({"kernelize", "tp-vc", p4, "--cover", "1,2"});
	CHECK(vc.code == 0);
	CHECK(vc.out.find("no instance") != std::string::npos);

	CHECK(cli({"kernelize", "tp-vc", p4, "--tc-cert", cert}).code == 2);
}

TEST_CASE("kernelize compresses triangle partition instances") {
	std::string k3 = graph_file("k3.dimacs", complete_graph(3));
	auto r = cli({"kernelize", "tp-tc", k3});
	CHECK(r.code == 0);
	CHECK(r.out.find("target 0") != std::string::npos);
}

TEST_CASE("the codec round trips through files") {
	std::string k5 = graph_file("k5g.dimacs", complete_graph(5));
	std::string enc = (scratch() / "k5.pgk").string();

	auto c = cli({"compress-nd", k5, "--kind", "clique", "-k", "3", "-o", enc, "--json"});
	CHECK(c.code == 0);
	auto cj = nlohmann::json::parse(c.out);
	CHECK(cj.at("nd") == 1);
	CHECK(cj.at("bits").get<std::size_t>() <= cj.at("bit_bound").get<std::size_t>());
	CHECK(cj.at("fpt_regime") == true);

	auto d = cli({"decompress-nd", enc, "--json"});
	CHECK(d.code == 0);
	auto dj = nlohmann::json::parse(d.out);
	CHECK(dj.at("kind") == "clique");
	CHECK(dj.at("k") == 3);
	CHECK(graph_from_json(dj.at("graph")) == complete_graph(5));

	// without an output file the bytes appear as hex
	auto inline_enc = cli({"compress-nd", k5, "--kind", "clique", "-k", "3", "--json"});
	CHECK(nlohmann::json::parse(inline_enc.out).contains("bytes_hex"));

	std::string junk = write_file("junk.pgk", "not an encoding");
	CHECK(cli({"decompress-nd", junk}).code == 2);
}

TEST_CASE("reduce runs the gadget constructions") {
	std::string p4 = graph_file("p4c.dimacs", path_graph(4));
	auto r = cli({"reduce", "vc-refine", p4, "-k", "1", "--json"});
	CHECK(r.code == 0);
	auto rj = nlohmann::json::parse(r.out);
	CHECK(rj.at("refinement").at("kind") == "vcr");
	CHECK(rj.at("cover").size() <= rj.at("cover_bound").get<std::size_t>());
	CHECK(rj.at("labels").size() ==
	      rj.at("refinement").at("graph").at("n").get<std::size_t>());
	CHECK(cli({"reduce", "vc-refine", p4}).code == 2); // threshold required

	std::string cnf = write_file("f.json",
	                             formula_to_json(CnfFormula(2, {{1, -2}})).dump());
	auto s = cli({"reduce", "sat-chromatic", cnf, "--json"});
	CHECK(s.code == 0);
	auto sj = nlohmann::json::parse(s.out);
	CHECK(sj.at("instance").at("kind") == "chromatic-number");
	CHECK(sj.at("instance").at("k") == 3);

	// mcc-im needs a full colored instance, not a bare graph
	std::string plain = write_file("plain.json",
	                               graph_to_json(complete_graph(3)).dump());
	CHECK(cli({"reduce", "mcc-im", plain}).code == 2);
}

TEST_CASE("compose joins inputs from files") {
	std::string a = graph_file("part-a.dimacs", complete_graph(3));
	std::string b = graph_file("part-b.dimacs", path_graph(3));
	auto r = cli({"compose", "clique-or", a, b, "-k", "3", "--json"});
	CHECK(r.code == 0);
	auto rj = nlohmann::json::parse(r.out);
	CHECK(rj.at("instance").at("kind") == "clique");
	CHECK(rj.at("instance").at("graph").at("n") == 6);
	CHECK(rj.at("offsets") == nlohmann::json({0, 3}));

	CHECK(cli({"compose", "clique-or", a, b}).code == 2);      // no threshold
	CHECK(cli({"compose", "no-such-batch", a, b}).code == 2);
}

TEST_CASE("turing transcripts are reported") {
	std::string two = graph_file("two-triangles.dimacs",
	                             disjoint_union({complete_graph(3), complete_graph(3)}).graph);
	auto yes = cli({"turing-clique", two, "-k", "3"});
	CHECK(yes.code == 0);
	CHECK(yes.out.find("yes") == 0);

	auto j = cli({"turing-clique", two, "-k", "4", "--json"});
	CHECK(j.code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("answer") == false);
	CHECK(parsed.at("cover_size") == 0);
	for (const auto& q : parsed.at("queries")) CHECK(q.at("n").get<int>() <= 1);
}

TEST_CASE("verify drives the suites and sets the exit code") {
	auto ok = cli({"verify", "--targets", "cfa-kernel", "--trials", "5"});
	CHECK(ok.code == 0);
	CHECK(ok.out.find("PASS") != std::string::npos);

	auto bad = cli({"verify", "--targets", "_fault-vc-refine", "--trials", "10"});
	CHECK(bad.code == 1);
	CHECK(bad.out.find("FAILED") != std::string::npos);
	CHECK(bad.out.find("counterexample") != std::string::npos);

	auto j = cli({"verify", "--targets", "cfa-kernel,sat-steiner", "--trials", "5",
	              "--json"});
	CHECK(j.code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("pass") == true);
	CHECK(parsed.at("targets").size() == 2);

	CHECK(cli({"verify", "--targets", "no-such-target"}).code == 2);
}

TEST_CASE("verify sweeps the parameter corpus") {
	auto r = cli({"verify", "--sweep"});
	CHECK(r.code == 0);
	CHECK(r.out.find("all inequalities hold") != std::string::npos);

	auto j = cli({"verify", "--sweep", "--json"});
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed.at("pass") == true);
	CHECK(parsed.at("graphs") == 816);
}

TEST_CASE("gen produces deterministic inputs") {
	std::string a = (scratch() / "gen-a.dimacs").string();
	std::string b = (scratch() / "gen-b.dimacs").string();
	CHECK(cli({"gen", "gnp", "-n", "6", "-p", "0.5", "--seed", "9", "-o", a}).code == 0);
	CHECK(cli({"gen", "gnp", "-n", "6", "-p", "0.5", "--seed", "9", "-o", b}).code == 0);
	std::ifstream fa(a), fb(b);
	std::stringstream sa, sb;
	sa << fa.rdbuf();
	sb << fb.rdbuf();
	CHECK(sa.str() == sb.str());
	CHECK(parse_dimacs(sa.str()).num_vertices() == 6);

	auto j = cli({"gen", "cluster", "--sizes", "3,4", "--attach", "2", "--json"});
	CHECK(j.code == 0);
	CHECK(nlohmann::json::parse(j.out).at("n") == 9);

	std::string cnf = (scratch() / "gen.cnf").string();
	CHECK(cli({"gen", "cnf", "--vars", "2", "--clauses", "2", "-o", cnf}).code == 0);
	CHECK(cli({"solve", "cnf-sat", cnf}).code == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "brute.hpp"
#include "pgk/errors.hpp"
#include "pgk/generate.hpp"
#include "pgk/graph.hpp"
#include "pgk/nd_compress.hpp"
#include "pgk/oracles.hpp"
#include "pgk/params.hpp"

using namespace pgk;

namespace {

std::vector<std::uint8_t> enc_bytes(const Graph& g, ProblemKind kind, long long k) {
	return encode_nd(g, kind, k).bytes;
}

int tag_of(ProblemKind kind) {
	const auto& kinds = nd_codec_kinds();
	return int(std::find(kinds.begin(), kinds.end(), kind) - kinds.begin());
}

}

TEST_CASE("carried problem kinds") {
	CHECK(nd_codec_kinds().size() == 12);
	CHECK(nd_codec_supports(ProblemKind::clique));
	CHECK(nd_codec_supports(ProblemKind::steiner_tree));
	CHECK(nd_codec_supports(ProblemKind::connected_vertex_cover));
	CHECK_FALSE(nd_codec_supports(ProblemKind::hamiltonian_path));
	CHECK_FALSE(nd_codec_supports(ProblemKind::triangle_partition));
	CHECK_FALSE(nd_codec_supports(ProblemKind::cnf_sat));
	CHECK_FALSE(nd_codec_supports(ProblemKind::multicolored_clique));
}

TEST_CASE("complete graph packs into one clique class") {
	auto enc = encode_nd(complete_graph(5), ProblemKind::clique, 3);
	CHECK(enc.partition.width() == 1);
	CHECK(enc.quotient.num_vertices() == 1);
	std::vector<std::uint8_t> expect = {0x51, 1, 0x01, 5,
	                                    std::uint8_t(tag_of(ProblemKind::clique)), 3};
	CHECK(enc.bytes == expect);

	auto dec = decode_nd(enc.bytes);
	CHECK(dec.graph == complete_graph(5));
	CHECK(dec.kind == ProblemKind::clique);
	CHECK(dec.k == 3);
}

TEST_CASE("edgeless graph packs into one independent class") {
	auto enc = encode_nd(Graph(7), ProblemKind::independent_set, 7);
	std::vector<std::uint8_t> expect = {
	    0x51, 1, 0x00, 7, std::uint8_t(tag_of(ProblemKind::independent_set)), 7};
	CHECK(enc.bytes == expect);
	CHECK(decode_nd(enc.bytes).graph == Graph(7));
}

TEST_CASE("complete bipartite layout") {
	auto enc = encode_nd(complete_bipartite(2, 3), ProblemKind::dominating_set, 2);
	REQUIRE(enc.partition.width() == 2);
	// two independent classes joined by the single quotient edge
	std::vector<std::uint8_t> expect = {
	    0x51, 2, 0x00, 0x01, 2, 3, std::uint8_t(tag_of(ProblemKind::dominating_set)), 2};
	CHECK(enc.bytes == expect);
	CHECK(decode_nd(enc.bytes).graph == complete_bipartite(2, 3));
}

TEST_CASE("empty graph") {
	auto enc = encode_nd(Graph(0), ProblemKind::vertex_cover, 0);
	auto dec = decode_nd(enc.bytes);
	CHECK(dec.graph.num_vertices() == 0);
	CHECK(dec.kind == ProblemKind::vertex_cover);
	CHECK(dec.k == 0);
}

TEST_CASE("large class weights take several varint bytes") {
	Graph big = complete_graph(200);
	auto enc = encode_nd(big, ProblemKind::clique, 200);
	std::vector<std::uint8_t> expect = {0x51, 1,    0x01, 0xc8, 0x01,
	                                    std::uint8_t(tag_of(ProblemKind::clique)),
	                                    0xc8, 0x01};
	CHECK(enc.bytes == expect);
	CHECK(decode_nd(enc.bytes).graph == big);
}

TEST_CASE("decoding rebuilds the graph up to isomorphism") {
	// interleave the sides of a complete bipartite graph so the classes are
	// no longer contiguous id ranges
	Graph scrambled(5, {{0, 1}, {0, 3}, {2, 1}, {2, 3}, {4, 1}, {4, 3}});
	auto dec = decode_nd(enc_bytes(scrambled, ProblemKind::clique, 2));
	CHECK(dec.graph != scrambled);
	CHECK(brute::isomorphic(dec.graph, scrambled));

	for (const Graph& g : {complete_graph(5), cycle_graph(5), path_graph(6),
	                       petersen_graph(), star_graph(4)}) {
		auto out = decode_nd(enc_bytes(g, ProblemKind::vertex_cover, 1));
		CHECK(brute::isomorphic(out.graph, g));
	}

	std::mt19937_64 rng(91);
	for (int round = 0; round < 40; ++round) {
		Graph g = gen_gnp(1 + int(rng() % 8), 0.4, rng());
		auto out = decode_nd(enc_bytes(g, ProblemKind::clique, 1));
		CHECK(brute::isomorphic(out.graph, g));
	}
}

TEST_CASE("answers survive the round trip for every carried kind") {
	std::vector<long long> ks = {0, 1, 2, 3, 4};
	CHECK(verify_answer_preserved(complete_graph(4), nd_codec_kinds(), ks).empty());
	CHECK(verify_answer_preserved(cycle_graph(6), nd_codec_kinds(), ks).empty());
	CHECK(verify_answer_preserved(complete_bipartite(2, 3), nd_codec_kinds(), ks).empty());

	std::mt19937_64 rng(92);
	for (int round = 0; round < 15; ++round) {
		Graph g = gen_gnp(2 + int(rng() % 6), 0.5, rng());
		auto bad = verify_answer_preserved(g, nd_codec_kinds(),
		                                   {0, 2, (long long)(g.num_vertices())});
		CAPTURE(to_dimacs(g));
		CHECK(bad.empty());
	}
}

TEST_CASE("measured size stays under the declared bound") {
	std::mt19937_64 rng(93);
	for (int round = 0; round < 50; ++round) {
		Graph g = gen_gnp(1 + int(rng() % 9), 0.3 + 0.05 * double(rng() % 9), rng());
		auto enc = encode_nd(g, ProblemKind::clique, 1 + int(rng() % 4));
		int width = enc.partition.width();
		CHECK(enc.bit_bound == nd_bit_bound(width, g.num_vertices()));
		CHECK(enc.bytes.size() * 8 <= enc.bit_bound);
	}
	auto enc = encode_nd(petersen_graph(), ProblemKind::chromatic_number, 3);
	CHECK(enc.bytes.size() * 8 <= enc.bit_bound);
}

TEST_CASE("encode rejects what the format cannot carry") {
	CHECK_THROWS_AS(encode_nd(complete_graph(3), ProblemKind::triangle_partition, 0),
	                argument_error);
	CHECK_THROWS_AS(encode_nd(complete_graph(3), ProblemKind::hamiltonian_path, 0),
	                argument_error);
	CHECK_THROWS_AS(encode_nd(complete_graph(2), ProblemKind::clique, -1), argument_error);
	// thresholds stop at (n+1)^4
	CHECK_NOTHROW(encode_nd(complete_graph(2), ProblemKind::clique, 81));
	CHECK_THROWS_AS(encode_nd(complete_graph(2), ProblemKind::clique, 82), argument_error);
}

TEST_CASE("decode error taxonomy") {
	auto valid = enc_bytes(complete_graph(3), ProblemKind::clique, 2);

	auto magic = valid;
	magic[0] = 0x52;
	CHECK_THROWS_WITH_AS(decode_nd(magic), "bad magic byte", decode_error);

	std::vector<std::uint8_t> zero_weight = {0x51, 1, 0x01, 0, 0, 0};
	CHECK_THROWS_WITH_AS(decode_nd(zero_weight), "class of weight zero", decode_error);

	auto truncated = valid;
	truncated.pop_back();
	CHECK_THROWS_WITH_AS(decode_nd(truncated), "truncated encoding", decode_error);

	auto trailing = valid;
	trailing.push_back(0x00);
	CHECK_THROWS_WITH_AS(decode_nd(trailing), "trailing bytes", decode_error);

	// a ten-byte varint whose top byte still carries payload
	std::vector<std::uint8_t> wide = {0x51, 0xff, 0xff, 0xff, 0xff, 0xff,
	                                  0xff, 0xff, 0xff, 0xff, 0x7f};
	CHECK_THROWS_WITH_AS(decode_nd(wide), "varint overflows", decode_error);

	// one class of 2^31 vertices
	std::vector<std::uint8_t> huge = {0x51, 1, 0x01, 0x80, 0x80, 0x80, 0x80, 0x08, 0, 0};
	CHECK_THROWS_WITH_AS(decode_nd(huge), "vertex count overflows", decode_error);

	auto tagged = valid;
	tagged[tagged.size() - 2] = 12; // one past the carried kinds
	CHECK_THROWS_WITH_AS(decode_nd(tagged), "unknown problem tag", decode_error);

	// threshold of exactly 2^63
	std::vector<std::uint8_t> steep = {0x51, 1,    0x01, 3,    0,    0x80, 0x80,
	                                   0x80, 0x80, 0x80, 0x80, 0x80, 0x80, 0x80,
	                                   0x01};
	CHECK_THROWS_WITH_AS(decode_nd(steep), "threshold overflows", decode_error);

	CHECK_THROWS_AS(decode_nd({}), decode_error);
}

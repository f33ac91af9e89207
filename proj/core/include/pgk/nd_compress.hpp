#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pgk/graph.hpp"
#include "pgk/guardrails.hpp"
#include "pgk/instance.hpp"
#include "pgk/params.hpp"

namespace pgk {

// Binary encoding of a graph as the labeled, weighted quotient of its
// neighborhood partition: magic byte, class count, one kind bit per class
// (1 = clique), upper-triangle quotient adjacency bits, one weight varint
// per class, a problem tag byte and the threshold varint. Class order is by
// smallest member id, so encodings are canonical bytes.
struct QuotientEncoding {
	std::vector<std::uint8_t> bytes;
	NdPartition partition;
	Graph quotient;
	std::size_t bit_bound = 0; // declared upper bound for bytes.size()*8
};

// The problem kinds the codec carries in its tag byte: the ones whose answer
// depends on the graph only up to isomorphism plus a threshold, so decoding
// preserves it. (Steiner tree is included with the all-vertices terminal
// set; encode rejects any other terminal choice.)
const std::vector<ProblemKind>& nd_codec_kinds();
bool nd_codec_supports(ProblemKind k);

// Bit-length bound emitted alongside each encoding, with
// L = max(1, bit_width(n)):  32*nd^2 + 32*nd*L + 128*L.
std::size_t nd_bit_bound(int nd, long long n);

// argument_error when the kind is unsupported or k is outside [0, (n+1)^4].
QuotientEncoding encode_nd(const Graph& g, ProblemKind kind, long long k);

struct NdDecoded {
	Graph graph;
	ProblemKind kind = ProblemKind::clique;
	long long k = 0;
};

// decode_error on bad magic, zero weights, truncated or trailing bytes.
// The graph is rebuilt class by class, so it is isomorphic to the encoded
// one (equal when the input's classes happened to be contiguous).
NdDecoded decode_nd(const std::vector<std::uint8_t>& bytes);

// Round-trips g through the codec for each kind and compares exact answers
// over the given thresholds. Returns human-readable mismatch descriptions
// (empty = all preserved).
std::vector<std::string> verify_answer_preserved(const Graph& g,
                                                 const std::vector<ProblemKind>& kinds,
                                                 const std::vector<long long>& ks,
                                                 const Guardrails& lim = {});

}

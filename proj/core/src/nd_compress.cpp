#include "pgk/nd_compress.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>

#include "pgk/errors.hpp"
#include "pgk/oracles.hpp"

namespace pgk {

namespace {

constexpr std::uint8_t codec_magic = 0x51;

void push_varint(std::vector<std::uint8_t>& out, unsigned long long v) {
	do {
		std::uint8_t byte = v & 0x7f;
		v >>= 7;
		if (v) byte |= 0x80;
		out.push_back(byte);
	} while (v != 0);
}

// append bits LSB-first within each byte
struct BitWriter {
	std::vector<std::uint8_t>& out;
	int fill = 8; // bits used in the last byte; 8 = no open byte

	void push(bool bit) {
		if (fill == 8) {
			out.push_back(0);
			fill = 0;
		}
		if (bit) out.back() |= std::uint8_t(1) << fill;
		++fill;
	}
};

struct ByteReader {
	const std::vector<std::uint8_t>& bytes;
	std::size_t pos = 0;

	std::uint8_t next() {
		if (pos >= bytes.size()) throw decode_error("truncated encoding");
		return bytes[pos++];
	}

	unsigned long long varint() {
		unsigned long long v = 0;
		int shift = 0;
		while (true) {
			std::uint8_t b = next();
			if (shift == 63 && (b & 0x7e)) throw decode_error("varint overflows");
			v |= (unsigned long long)(b & 0x7f) << shift;
			if (!(b & 0x80)) return v;
			shift += 7;
			if (shift > 63) throw decode_error("varint overflows");
		}
	}
};

struct BitReader {
	ByteReader& in;
	std::uint8_t cur = 0;
	int left = 0;

	bool pull() {
		if (left == 0) {
			cur = in.next();
			left = 8;
		}
		bool bit = cur & 1;
		cur >>= 1;
		--left;
		return bit;
	}
};

// (n+1)^4, saturating instead of overflowing
long long threshold_ceiling(long long n) {
	long long r = 1;
	for (int i = 0; i < 4; ++i) {
		if (r > LLONG_MAX / (n + 1)) return LLONG_MAX;
		r *= n + 1;
	}
	return r;
}

}

const std::vector<ProblemKind>& nd_codec_kinds() {
	static const std::vector<ProblemKind> kinds = {
	    ProblemKind::steiner_tree,
	    ProblemKind::induced_matching,
	    ProblemKind::chromatic_number,
	    ProblemKind::hamiltonian_cycle,
	    ProblemKind::connected_dominating_set,
	    ProblemKind::dominating_set,
	    ProblemKind::clique,
	    ProblemKind::independent_set,
	    ProblemKind::vertex_cover,
	    ProblemKind::feedback_vertex_set,
	    ProblemKind::odd_cycle_transversal,
	    ProblemKind::connected_vertex_cover,
	};
	return kinds;
}

bool nd_codec_supports(ProblemKind k) {
	const auto& kinds = nd_codec_kinds();
	return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

std::size_t nd_bit_bound(int nd, long long n) {
	std::size_t L = std::max<std::size_t>(1, std::bit_width((unsigned long long)(n)));
	std::size_t d = std::size_t(nd);
	return 32 * d * d + 32 * d * L + 128 * L;
}

QuotientEncoding encode_nd(const Graph& g, ProblemKind kind, long long k) {
	if (!nd_codec_supports(kind))
		throw argument_error("codec does not carry " + kind_name(kind));
	const long long n = g.num_vertices();
	if (k < 0 || k > threshold_ceiling(n))
		throw argument_error("threshold " + std::to_string(k) +
		                     " outside the codec range for " + std::to_string(n) +
		                     " vertices");

	QuotientEncoding enc;
	enc.partition = nd_partition(g);
	std::vector<std::vector<int>> parts;
	for (const auto& cls : enc.partition.classes) parts.push_back(cls.members);
	enc.quotient = quotient_graph(g, parts).graph;

	const int d = enc.partition.width();
	enc.bytes.push_back(codec_magic);
	push_varint(enc.bytes, (unsigned long long)(d));
	{
		BitWriter w{enc.bytes};
		for (const auto& cls : enc.partition.classes)
			w.push(cls.kind == NdClassKind::clique);
	}
	{
		BitWriter w{enc.bytes};
		for (int i = 0; i < d; ++i)
			for (int j = i + 1; j < d; ++j) w.push(enc.quotient.has_edge(i, j));
	}
	for (const auto& cls : enc.partition.classes)
		push_varint(enc.bytes, cls.members.size());

	const auto& kinds = nd_codec_kinds();
	auto it = std::find(kinds.begin(), kinds.end(), kind);
	enc.bytes.push_back(std::uint8_t(it - kinds.begin()));
	push_varint(enc.bytes, (unsigned long long)(k));

	enc.bit_bound = nd_bit_bound(d, n);
	return enc;
}

NdDecoded decode_nd(const std::vector<std::uint8_t>& bytes) {
	ByteReader in{bytes};
	if (in.next() != codec_magic) throw decode_error("bad magic byte");

	unsigned long long width = in.varint();
	if (width > 8 * bytes.size()) throw decode_error("truncated encoding");
	const int d = int(width);

	std::vector<bool> clique_class(d);
	{
		BitReader bits{in};
		for (int i = 0; i < d; ++i) clique_class[i] = bits.pull();
	}
	std::vector<std::vector<bool>> adj(d, std::vector<bool>(d, false));
	{
		BitReader bits{in};
		for (int i = 0; i < d; ++i)
			for (int j = i + 1; j < d; ++j) adj[i][j] = adj[j][i] = bits.pull();
	}
	std::vector<long long> weight(d);
	long long total = 0;
	for (int i = 0; i < d; ++i) {
		unsigned long long w = in.varint();
		if (w == 0) throw decode_error("class of weight zero");
		if (w > (unsigned long long)(INT_MAX) ||
		    total > (long long)(INT_MAX) - (long long)(w))
			throw decode_error("vertex count overflows");
		weight[i] = (long long)(w);
		total += (long long)(w);
	}

	std::uint8_t tag = in.next();
	if (tag >= nd_codec_kinds().size()) throw decode_error("unknown problem tag");
	unsigned long long k = in.varint();
	if (k > (unsigned long long)(LLONG_MAX)) throw decode_error("threshold overflows");
	if (in.pos != bytes.size()) throw decode_error("trailing bytes");

	// expand: classes take consecutive id ranges in encoded order
	std::vector<int> first(d + 1, 0);
	for (int i = 0; i < d; ++i) first[i + 1] = first[i] + int(weight[i]);
	std::vector<std::pair<int, int>> edges;
	for (int i = 0; i < d; ++i) {
		if (clique_class[i])
			for (int u = first[i]; u < first[i + 1]; ++u)
				for (int v = u + 1; v < first[i + 1]; ++v) edges.push_back({u, v});
		for (int j = i + 1; j < d; ++j) {
			if (!adj[i][j]) continue;
			for (int u = first[i]; u < first[i + 1]; ++u)
				for (int v = first[j]; v < first[j + 1]; ++v) edges.push_back({u, v});
		}
	}

	NdDecoded out;
	out.graph = Graph(int(total), edges);
	out.kind = nd_codec_kinds()[tag];
	out.k = (long long)(k);
	return out;
}

std::vector<std::string> verify_answer_preserved(const Graph& g,
                                                 const std::vector<ProblemKind>& kinds,
                                                 const std::vector<long long>& ks,
                                                 const Guardrails& lim) {
	std::vector<std::string> mismatches;
	std::vector<int> all(g.num_vertices());
	std::iota(all.begin(), all.end(), 0);
	for (ProblemKind kind : kinds) {
		for (long long k : ks) {
			QuotientEncoding enc = encode_nd(g, kind, k);
			NdDecoded dec = decode_nd(enc.bytes);
			std::vector<int> dec_all(dec.graph.num_vertices());
			std::iota(dec_all.begin(), dec_all.end(), 0);
			ProblemInstance before =
			    kind == ProblemKind::steiner_tree
			        ? steiner_instance(g, all, k)
			        : graph_instance(kind, g, k);
			ProblemInstance after =
			    kind == ProblemKind::steiner_tree
			        ? steiner_instance(dec.graph, dec_all, dec.k)
			        : graph_instance(dec.kind, dec.graph, dec.k);
			bool yes_before = solve(before, lim).yes;
			bool yes_after = solve(after, lim).yes;
			if (yes_before != yes_after)
				mismatches.push_back(kind_name(kind) + " at k=" + std::to_string(k) +
				                     ": " + (yes_before ? "yes" : "no") + " became " +
				                     (yes_after ? "yes" : "no"));
		}
	}
	return mismatches;
}

}

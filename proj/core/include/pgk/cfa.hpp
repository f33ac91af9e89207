#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace pgk {

using BigInt = boost::multiprecision::cpp_int;

// Buyer weight: a nonnegative integer or an explicit infinity. An infinite
// weight exceeds every capacity, so such a buyer can never be assigned.
struct CfaWeight {
	bool infinite = false;
	BigInt value = 0;

	static CfaWeight inf() {
		CfaWeight w;
		w.infinite = true;
		return w;
	}
	static CfaWeight of(BigInt v) {
		CfaWeight w;
		w.value = std::move(v);
		return w;
	}

	bool operator==(const CfaWeight& o) const {
		return infinite == o.infinite && (infinite || value == o.value);
	}
};

// Assignment instance: bipartite buyers/sellers, buyer profits and weights,
// seller capacities, pairwise buyer conflicts, profit target. Vertex ids are
// arbitrary nonnegative ints and need not be dense (kernel rules delete
// vertices and mint fresh sellers).
struct CfaInstance {
	std::map<int, BigInt> profit;            // buyer id -> profit
	std::map<int, CfaWeight> weight;         // buyer id -> weight
	std::map<int, BigInt> capacity;          // seller id -> capacity
	std::set<std::pair<int, int>> edges;     // (buyer id, seller id)
	std::set<std::pair<int, int>> conflicts; // buyer pairs, stored (lo, hi)
	BigInt target = 0;

	int num_buyers() const { return int(profit.size()); }
	int num_sellers() const { return int(capacity.size()); }
	int buyer_degree(int b) const;
	int seller_degree(int s) const;

	// argument_error on structural inconsistency (edge endpoints unknown,
	// profit/weight keyed on different buyer sets, reflexive conflicts, ...)
	void validate() const;

	bool operator==(const CfaInstance& o) const {
		return profit == o.profit && weight == o.weight && capacity == o.capacity &&
		       edges == o.edges && conflicts == o.conflicts && target == o.target;
	}
};

// One reduction-rule firing, for audit.
struct CfaKernelStep {
	enum class Rule { drop_isolated, drop_heavy_edge, rewire_big_buyer };
	Rule rule;
	int vertex = -1;     // drop_isolated: the deleted vertex
	bool vertex_is_buyer = false;
	int buyer = -1;      // drop_heavy_edge / rewire_big_buyer
	int seller = -1;     // drop_heavy_edge: the edge's seller end
	int fresh_seller = -1; // rewire_big_buyer: the minted seller
};

struct CfaKernelResult {
	CfaInstance instance;
	std::vector<CfaKernelStep> trace;
};

// Applies the three reduction rules to exhaustion, strictly in priority
// order: isolated-vertex deletion, then overweight-edge deletion, and only
// when neither applies, rewiring of a buyer with more than |B| neighbors to
// one fresh seller of capacity w(b). After a rewire the scan restarts at the
// first rule. The result has no isolated vertices, every buyer degree at
// most |B| and at most |B|^2 sellers; target, profits and conflicts are
// unchanged.
CfaKernelResult kernelize_cfa(const CfaInstance& in);

// Checks the post-kernel structural bounds; returns a description of the
// first violation, or nullopt when all bounds hold.
std::optional<std::string> kernel_bound_violation(const CfaInstance& in);

// Random instance for the property suites: up to max_buyers buyers, up to
// max_sellers sellers, small values with occasional infinities and a target
// drawn near the reachable profit range.
CfaInstance random_cfa(int max_buyers, int max_sellers, std::uint64_t seed);

// JSON wire format. Values are decimal strings on output (they may exceed
// 64 bits); plain integers are accepted on input. Weight "inf" is the
// infinite sentinel.
nlohmann::json cfa_to_json(const CfaInstance& inst);
CfaInstance cfa_from_json(const nlohmann::json& j);

}

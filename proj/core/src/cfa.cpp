#include "pgk/cfa.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "pgk/errors.hpp"

namespace pgk {

int CfaInstance::buyer_degree(int b) const {
	int d = 0;
	for (auto it = edges.lower_bound({b, std::numeric_limits<int>::min()});
	     it != edges.end() && it->first == b; ++it)
		++d;
	return d;
}

int CfaInstance::seller_degree(int s) const {
	int d = 0;
	for (const auto& e : edges)
		if (e.second == s) ++d;
	return d;
}

void CfaInstance::validate() const {
	if (profit.size() != weight.size())
		throw argument_error("cfa: profit and weight must cover the same buyers");
	for (const auto& [b, p] : profit) {
		if (!weight.count(b))
			throw argument_error("cfa: buyer " + std::to_string(b) + " has profit but no weight");
		if (p < 0) throw argument_error("cfa: negative profit for buyer " + std::to_string(b));
	}
	for (const auto& [b, w] : weight)
		if (!w.infinite && w.value < 0)
			throw argument_error("cfa: negative weight for buyer " + std::to_string(b));
	for (const auto& [s, c] : capacity)
		if (c < 0) throw argument_error("cfa: negative capacity for seller " + std::to_string(s));
	for (const auto& [b, s] : edges) {
		if (!profit.count(b))
			throw argument_error("cfa: edge references unknown buyer " + std::to_string(b));
		if (!capacity.count(s))
			throw argument_error("cfa: edge references unknown seller " + std::to_string(s));
	}
	for (const auto& [a, b] : conflicts) {
		if (a >= b)
			throw argument_error("cfa: conflict pairs must be stored (lo, hi)");
		if (!profit.count(a) || !profit.count(b))
			throw argument_error("cfa: conflict references unknown buyer");
	}
	if (target < 0) throw argument_error("cfa: negative target");
}

namespace {

// drops a batch of buyers with one sweep over the conflict set
void erase_buyers(CfaInstance& g, const std::vector<int>& dead) {
	std::set<int> gone(dead.begin(), dead.end());
	for (int b : dead) {
		g.profit.erase(b);
		g.weight.erase(b);
	}
	for (auto it = g.conflicts.begin(); it != g.conflicts.end();)
		it = (gone.count(it->first) || gone.count(it->second)) ? g.conflicts.erase(it)
		                                                       : std::next(it);
}

// capacity comparison treating infinite weight as larger than everything
bool weight_exceeds(const CfaWeight& w, const BigInt& cap) {
	return w.infinite || w.value > cap;
}

}

CfaKernelResult kernelize_cfa(const CfaInstance& in) {
	in.validate();
	CfaKernelResult res;
	CfaInstance& g = res.instance;
	g = in;

	int next_id = 0;
	for (const auto& [b, p] : g.profit) next_id = std::max(next_id, b + 1);
	for (const auto& [s, c] : g.capacity) next_id = std::max(next_id, s + 1);

	for (bool progress = true; progress;) {
		progress = false;

		// rule 1: drop degree-0 vertices on both sides, to exhaustion.
		// A deleted buyer takes its profit, weight and conflicts along: it
		// can never be assigned, so none of them can matter.
		for (bool r1 = true; r1;) {
			r1 = false;
			std::vector<int> dead_buyers, dead_sellers;
			for (const auto& [b, p] : g.profit)
				if (g.buyer_degree(b) == 0) dead_buyers.push_back(b);
			{
				std::set<int> touched;
				for (const auto& e : g.edges) touched.insert(e.second);
				for (const auto& [s, c] : g.capacity)
					if (!touched.count(s)) dead_sellers.push_back(s);
			}
			if (!dead_buyers.empty()) erase_buyers(g, dead_buyers);
			for (int b : dead_buyers) {
				CfaKernelStep st;
				st.rule = CfaKernelStep::Rule::drop_isolated;
				st.vertex = b;
				st.vertex_is_buyer = true;
				res.trace.push_back(st);
				r1 = true;
			}
			for (int s : dead_sellers) {
				g.capacity.erase(s);
				CfaKernelStep st;
				st.rule = CfaKernelStep::Rule::drop_isolated;
				st.vertex = s;
				st.vertex_is_buyer = false;
				res.trace.push_back(st);
				r1 = true;
			}
		}

		// rule 2: drop edges whose buyer cannot fit the seller even alone
		{
			std::vector<std::pair<int, int>> heavy;
			for (const auto& [b, s] : g.edges)
				if (weight_exceeds(g.weight.at(b), g.capacity.at(s))) heavy.push_back({b, s});
			for (const auto& [b, s] : heavy) {
				g.edges.erase({b, s});
				CfaKernelStep st;
				st.rule = CfaKernelStep::Rule::drop_heavy_edge;
				st.buyer = b;
				st.seller = s;
				res.trace.push_back(st);
			}
			if (!heavy.empty()) {
				progress = true;
				continue; // deletions may have isolated vertices; recheck rule 1
			}
		}

		// rule 3, one firing: a buyer with more neighbors than there are
		// buyers keeps any one of them in every solution shape, so rewire it
		// to a single fresh seller sized exactly to its weight. Rule 2 being
		// inapplicable guarantees the weight is finite (an infinite-weight
		// buyer cannot hold any edge here).
		{
			const int nb = g.num_buyers();
			int pick = -1;
			for (const auto& [b, p] : g.profit)
				if (g.buyer_degree(b) >= nb + 1) {
					pick = b;
					break;
				}
			if (pick >= 0) {
				for (auto it = g.edges.begin(); it != g.edges.end();)
					it = (it->first == pick) ? g.edges.erase(it) : std::next(it);
				const int fresh = next_id++;
				g.capacity[fresh] = g.weight.at(pick).value;
				g.edges.insert({pick, fresh});
				CfaKernelStep st;
				st.rule = CfaKernelStep::Rule::rewire_big_buyer;
				st.buyer = pick;
				st.fresh_seller = fresh;
				res.trace.push_back(st);
				progress = true;
			}
		}
	}
	return res;
}

std::optional<std::string> kernel_bound_violation(const CfaInstance& g) {
	const int nb = g.num_buyers();
	for (const auto& [b, p] : g.profit)
		if (g.buyer_degree(b) == 0)
			return "isolated buyer " + std::to_string(b);
	{
		std::set<int> touched;
		for (const auto& e : g.edges) touched.insert(e.second);
		for (const auto& [s, c] : g.capacity)
			if (!touched.count(s)) return "isolated seller " + std::to_string(s);
	}
	for (const auto& [b, p] : g.profit)
		if (g.buyer_degree(b) > nb)
			return "buyer " + std::to_string(b) + " has degree " +
			       std::to_string(g.buyer_degree(b)) + " > |B| = " + std::to_string(nb);
	if (g.num_sellers() > nb * nb)
		return "|S| = " + std::to_string(g.num_sellers()) + " > |B|^2 = " + std::to_string(nb * nb);
	for (const auto& [b, s] : g.edges)
		if (weight_exceeds(g.weight.at(b), g.capacity.at(s)))
			return "overweight edge (" + std::to_string(b) + ", " + std::to_string(s) + ")";
	return std::nullopt;
}

CfaInstance random_cfa(int max_buyers, int max_sellers, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	auto pick = [&](int lo, int hi) { return int(std::uniform_int_distribution<int>(lo, hi)(rng)); };

	CfaInstance g;
	const int nb = pick(0, max_buyers);
	const int ns = pick(0, max_sellers);
	for (int b = 0; b < nb; ++b) {
		BigInt p = pick(0, 9);
		if (pick(0, 9) == 0) p = p * BigInt("18446744073709551616") + pick(0, 999);
		g.profit[b] = p;
		g.weight[b] = (pick(0, 7) == 0) ? CfaWeight::inf() : CfaWeight::of(pick(0, 9));
	}
	for (int s = 0; s < ns; ++s) g.capacity[s] = pick(0, 12);
	for (int b = 0; b < nb; ++b)
		for (int s = 0; s < ns; ++s)
			if (pick(0, 1) == 0) g.edges.insert({b, s});
	for (int a = 0; a < nb; ++a)
		for (int b = a + 1; b < nb; ++b)
			if (pick(0, 3) == 0) g.conflicts.insert({a, b});

	BigInt total = 0;
	for (const auto& [b, p] : g.profit) total += p;
	// draw the target within (and slightly past) the reachable range so both
	// answers occur
	BigInt span = total + 2;
	BigInt r = 0;
	for (int i = 0; i < 4; ++i) r = r * 65536 + pick(0, 65535);
	g.target = r % span;
	return g;
}

namespace {

BigInt bigint_from_json(const nlohmann::json& j, const std::string& what) {
	try {
		if (j.is_number_integer()) return BigInt(j.get<long long>());
		if (j.is_string()) return BigInt(j.get<std::string>());
	} catch (const std::exception&) {
		throw parse_error("cfa: bad integer for " + what + ": " + j.dump());
	}
	throw parse_error("cfa: " + what + " must be an integer or decimal string");
}

}

nlohmann::json cfa_to_json(const CfaInstance& g) {
	nlohmann::json j;
	j["buyers"] = nlohmann::json::array();
	for (const auto& [b, p] : g.profit) {
		const CfaWeight& w = g.weight.at(b);
		j["buyers"].push_back({{"id", b},
		                       {"profit", p.str()},
		                       {"weight", w.infinite ? std::string("inf") : w.value.str()}});
	}
	j["sellers"] = nlohmann::json::array();
	for (const auto& [s, c] : g.capacity) j["sellers"].push_back({{"id", s}, {"capacity", c.str()}});
	j["edges"] = nlohmann::json::array();
	for (const auto& [b, s] : g.edges) j["edges"].push_back({b, s});
	j["conflicts"] = nlohmann::json::array();
	for (const auto& [a, b] : g.conflicts) j["conflicts"].push_back({a, b});
	j["target"] = g.target.str();
	return j;
}

CfaInstance cfa_from_json(const nlohmann::json& j) {
	if (!j.is_object()) throw parse_error("cfa: expected an object");
	CfaInstance g;
	for (const auto& jb : j.value("buyers", nlohmann::json::array())) {
		if (!jb.is_object() || !jb.contains("id"))
			throw parse_error("cfa: each buyer needs an id");
		const int b = jb.at("id").get<int>();
		if (g.profit.count(b)) throw parse_error("cfa: duplicate buyer id " + std::to_string(b));
		g.profit[b] = bigint_from_json(jb.value("profit", nlohmann::json(0)), "profit");
		nlohmann::json jw = jb.value("weight", nlohmann::json(0));
		if (jw.is_string() && jw.get<std::string>() == "inf")
			g.weight[b] = CfaWeight::inf();
		else
			g.weight[b] = CfaWeight::of(bigint_from_json(jw, "weight"));
	}
	for (const auto& js : j.value("sellers", nlohmann::json::array())) {
		if (!js.is_object() || !js.contains("id"))
			throw parse_error("cfa: each seller needs an id");
		const int s = js.at("id").get<int>();
		if (g.capacity.count(s)) throw parse_error("cfa: duplicate seller id " + std::to_string(s));
		g.capacity[s] = bigint_from_json(js.value("capacity", nlohmann::json(0)), "capacity");
	}
	for (const auto& je : j.value("edges", nlohmann::json::array())) {
		if (!je.is_array() || je.size() != 2)
			throw parse_error("cfa: edges must be [buyer, seller] pairs");
		g.edges.insert({je.at(0).get<int>(), je.at(1).get<int>()});
	}
	for (const auto& jc : j.value("conflicts", nlohmann::json::array())) {
		if (!jc.is_array() || jc.size() != 2)
			throw parse_error("cfa: conflicts must be buyer pairs");
		int a = jc.at(0).get<int>(), b = jc.at(1).get<int>();
		if (a > b) std::swap(a, b);
		if (a == b) throw parse_error("cfa: conflict pairs a vertex with itself");
		g.conflicts.insert({a, b});
	}
	g.target = bigint_from_json(j.value("target", nlohmann::json(0)), "target");
	try {
		g.validate();
	} catch (const argument_error& e) {
		throw parse_error(std::string("cfa: ") + e.what());
	}
	return g;
}

}

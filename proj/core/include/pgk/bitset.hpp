#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pgk {

// Fixed-capacity bitset sized at runtime. Enough for the solvers here; no
// bounds checks beyond the capacity given at construction.
struct DynBits {
	std::vector<std::uint64_t> w;

	DynBits() = default;
	explicit DynBits(int n) : w((n + 63) / 64, 0) {}

	void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
	void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
	bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

	int count() const {
		int c = 0;
		for (auto x : w) c += std::popcount(x);
		return c;
	}
	bool any() const {
		for (auto x : w)
			if (x) return true;
		return false;
	}
	// index of first set bit, -1 if none
	int first() const {
		for (std::size_t i = 0; i < w.size(); ++i)
			if (w[i]) return int(i * 64 + std::countr_zero(w[i]));
		return -1;
	}

	DynBits& operator&=(const DynBits& o) {
		for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
		return *this;
	}
	DynBits& operator|=(const DynBits& o) {
		for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
		return *this;
	}
	DynBits& subtract(const DynBits& o) {
		for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
		return *this;
	}
	bool intersects(const DynBits& o) const {
		for (std::size_t i = 0; i < w.size(); ++i)
			if (w[i] & o.w[i]) return true;
		return false;
	}
	// every bit of o is set here as well
	bool contains(const DynBits& o) const {
		for (std::size_t i = 0; i < w.size(); ++i)
			if (o.w[i] & ~w[i]) return false;
		return true;
	}
};

}

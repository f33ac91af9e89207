#include "pgk/guardrails.hpp"

#include <cstdlib>
#include <string>

namespace pgk {

Guardrails Guardrails::from_env() {
	Guardrails g;
	const char* v = std::getenv("PGK_UNRESTRICTED");
	if (v != nullptr) {
		std::string s(v);
		g.unrestricted = !s.empty() && s != "0";
	}
	return g;
}

}

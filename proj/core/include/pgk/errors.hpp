#pragma once

#include <stdexcept>
#include <string>

namespace pgk {

// Input text could not be parsed (bad DIMACS line, bad JSON shape, ...).
struct parse_error : std::runtime_error {
	explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A well-formed value that violates a precondition of the called operation.
struct argument_error : std::invalid_argument {
	explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Instance exceeds a declared size guardrail and no override was given.
struct resource_error : std::runtime_error {
	explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A binary blob failed structural validation during decoding.
struct decode_error : std::runtime_error {
	explicit decode_error(const std::string& msg) : std::runtime_error(msg) {}
};

}

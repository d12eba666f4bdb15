#pragma once

#include <stdexcept>
#include <string>

namespace stk {

/// An argument lies outside an operation's mathematical domain
/// (composite where a prime is required, p ≡ 3 mod 4, non-positive index...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input: integers, identities, digit strings, JSON.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stk

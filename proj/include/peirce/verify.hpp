// Suite-wide checks of the propositions, shared by `peirce verify-prop` and
// the acceptance tests.
//
//   prop-2.4       the three strongness conditions agree on every ring
//   lattice        ideal/submodule correspondence on strong instances
//   prop-3.2       the three hom-set strongness conditions agree
//   groupoids      every generated groupoid is hom-set strong
//   notgroupoid    MX(M, s) is hom-set strong; a groupoid iff M is a group
//   skew-claims    skew algebras are associative, strongly graded and
//                  object unital
//   prop-5.3       {1_{R_a} a} is strong iff the category is hom-set strong
//   eq-1a          1_a S 1_b = S_G(a,b) for every object unital grading
//   pair-groupoid  T[pair groupoid] has the structure constants of M_2(T)
//   mutations      every mutation is rejected with the targeted error

#ifndef PEIRCE_VERIFY_HPP_
#define PEIRCE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "peirce/finring.hpp"
#include "peirce/io.hpp"

namespace peirce::verify {

  struct Failure {
    std::size_t   index = 0;
    std::string   recipe;
    std::uint64_t seed = 0;
    std::string   reason;
  };

  struct PropResult {
    std::string          name;
    std::string          suite;
    std::size_t          instances = 0;  // generated
    std::size_t          checked   = 0;  // individual checks run
    std::vector<Failure> failures;
    double               seconds = 0;

    bool passed() const noexcept {
      return failures.empty() && checked > 0;
    }
  };

  std::vector<std::string> prop_names();

  // Throws UnknownSuite for an unknown name.
  PropResult verify_prop(std::string_view name, std::size_t cap = kDefaultLatticeCap);

  io::Json to_json(PropResult const& r, bool timings);

}  // namespace peirce::verify

#endif  // PEIRCE_VERIFY_HPP_

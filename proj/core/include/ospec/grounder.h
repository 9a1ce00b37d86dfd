// Copyright 2026 The ospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OSPEC_GROUNDER_H_
#define OSPEC_GROUNDER_H_

#include "ospec/ast.h"
#include "ospec/binding.h"
#include "ospec/ground_program.h"

namespace ospec {

// Instantiates a validated specification over the bound parameters.
//
// Grounding first computes the set of possibly-derivable atoms (including the
// created-object domain, i.e. every reachable `new C(args)` instance) by a
// fixpoint that ignores negation and cardinality bounds, then the subset of
// atoms that hold in every model (derived by definite rules only). A final
// pass emits one ground rule per substitution whose comparisons hold.
//
// Semantics fixed here:
//  * `V?Class(args)` binds V to the skolem id new(Class, args) and adds the
//    corresponding constructor atom as a positive body atom.
//  * `_` in a membership index means "at some index".
//  * `N? = {...}` yields one instance per feasible count k with the body
//    cardinality k {...} k.
//  * A choice rule with an empty body whose element atom has variables is a
//    schema: its bounds apply to each ground element atom separately. All
//    other choice rules bound the number of true element atoms collectively.
//  * Element conditions on atoms that are not fixed by definite rules are
//    encoded through auxiliary atoms inside body cardinalities; in choice
//    heads they are rejected.
//
// Throws Error(Stage::kGround) on a method-value miss or integer overflow.
// Nested construction is rejected the same way.
GroundProgram Ground(const SpecProgram& spec, const FactBase& facts,
                     const ObjectUniverse& universe);

}  // namespace ospec

#endif  // OSPEC_GROUNDER_H_

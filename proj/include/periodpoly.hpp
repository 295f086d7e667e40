/* Copyright 2026 The periodpoly Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERIODPOLY_PERIODPOLY_HPP
#define PERIODPOLY_PERIODPOLY_HPP

#include "periodpoly/arith.hpp"
#include "periodpoly/character_sums.hpp"
#include "periodpoly/closed_form.hpp"
#include "periodpoly/cyclotomic.hpp"
#include "periodpoly/field.hpp"
#include "periodpoly/partitions.hpp"
#include "periodpoly/periods.hpp"
#include "periodpoly/serialize.hpp"
#include "periodpoly/verify.hpp"

#endif  // PERIODPOLY_PERIODPOLY_HPP

/* Copyright 2026 The tgw Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TGW_TGW_HPP_
#define TGW_TGW_HPP_

#include "tgw/algebra.hpp"
#include "tgw/datum.hpp"
#include "tgw/errors.hpp"
#include "tgw/fraction.hpp"
#include "tgw/gallery.hpp"
#include "tgw/json_io.hpp"
#include "tgw/rewrite.hpp"
#include "tgw/ring.hpp"

#endif  // TGW_TGW_HPP_

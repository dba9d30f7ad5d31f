// Copyright 2026 The weaklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

#include <doctest.h>

#include "weaklab/error.hpp"

// Asserts that `expr` raises a weaklab::Error carrying `expected`.
#define CHECK_RAISES(expr, expected)                                                    \
    do {                                                                                \
        bool raised_ = false;                                                           \
        try {                                                                           \
            (void)(expr);                                                               \
        } catch (const weaklab::Error &e_) {                                            \
            raised_ = true;                                                             \
            CHECK_MESSAGE(e_.code() == (expected), e_.what());                          \
        }                                                                               \
        CHECK_MESSAGE(raised_, "expected " << weaklab::to_string(expected));            \
    } while (false)

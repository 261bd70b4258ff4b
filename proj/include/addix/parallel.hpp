/*
   Copyright 2026 The addix Authors

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

#ifndef ADDIX_PARALLEL_HPP
#define ADDIX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace addix {

/// Upper bound on worker threads used by exhaustive scans. 0 restores the default
/// (hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Splits [0, count) into blocks of `block` consecutive indices and calls
/// fn(block_index, begin, end) once per block. Blocks are distributed over at most
/// max_threads() workers; the block layout does not depend on the thread count.
void parallel_blocks(std::size_t count, std::size_t block,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace addix

#endif

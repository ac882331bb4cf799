// Copyright 2026 The ringchroma Authors
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


// Acceptance run: one line per criterion, nonzero exit if any fails.
// Pass --quick for a reduced instance count.

#include <cstdio>
#include <cstring>

#include "ringchroma/acceptance.hpp"

int main(int argc, char** argv) {
  ringchroma::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
  int failed = 0;
  for (const auto& r : ringchroma::run_acceptance(opts)) {
    std::printf("[%s] criterion %2d: %s (%d instances, %.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.instances, r.seconds, r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

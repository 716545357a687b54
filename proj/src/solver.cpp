/*
   Copyright 2026 The octsolve Authors

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

#include "octsolve/solver.hpp"

namespace octsolve {

std::string to_string(SystemForm form) {
    switch (form) {
        case SystemForm::Auto:
            return "auto";
        case SystemForm::Raw:
            return "raw";
        case SystemForm::CharNot2:
            return "char-not-2";
        case SystemForm::Char2TraceNonzero:
            return "char-2-trace-nonzero";
        case SystemForm::Char2Traceless:
            return "char-2-traceless";
        case SystemForm::ScalarOrbits:
            return "scalar-orbits";
    }
    return "unknown";
}

}  // namespace octsolve

// Copyright 2026 The Stackguard Authors
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

#ifndef STACKGUARD_FIGURE1_H_
#define STACKGUARD_FIGURE1_H_

#include "stackguard/game_core.h"

namespace stackguard {

// The canonical three-prompt jailbreak game. The attacker opens with
// benign, role_play or multi_turn; the model answers Accept, Reject or
// Redirect. Redirects and the accepted multi-turn setup open a follow-up
// attacker move. The shape below the first defender layer is a
// reconstruction and is fixed here as the reference instance:
//
//   x0 (attacker)
//   ├─ benign ─────> (defender) Accept: Safe | Reject: Blocked
//   ├─ role_play ──> (defender) Accept: Jailbreak | Reject: Blocked
//   │                 └ Redirect -> (attacker)
//   │                     ├ escalate -> (defender) Accept: Jailbreak
//   │                     │                        Reject: Blocked
//   │                     └ comply: Safe
//   └─ multi_turn ─> (defender) Accept -> (attacker)
//                     │   ├ probe -> (defender) Accept: Jailbreak
//                     │   │                     Reject: Blocked
//                     │   └ retreat: Safe
//                     ├ Reject: Blocked
//                     └ Redirect: Safe
GameTree build_figure1_game();

}  // namespace stackguard

#endif  // STACKGUARD_FIGURE1_H_

"""
Quickstart: train a small hybrid planner and execute its plans
==============================================================

Generates 2-block demonstrations, trains a small hybrid planner for a few
hundred steps, samples one continuous plan plus one symbolic plan, and
executes the continuous plan in the world.  Takes a few minutes on one core;
more steps (``--steps 3000``) give a much better planner.

    python demos/quickstart.py --root /tmp/quickstart
"""

import argparse
from pathlib import Path

from hybrid_diffusion.config import RunConfig
from hybrid_diffusion.evaluation import (Episode, PlannerPolicy, episode_start, evaluate,
                                         grammar_check)
from hybrid_diffusion.experiments import ensure_dataset
from hybrid_diffusion.rngcore import SeedTree
from hybrid_diffusion.sortworld import reward, rollout
from hybrid_diffusion.training import load_eval_planner, train

parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
parser.add_argument("--root", default="/tmp/quickstart")
parser.add_argument("--steps", type=int, default=800)
args = parser.parse_args()

# %%
# A run is described by one config; everything not given here takes the
# library defaults (K = 100 diffusion steps, token loss weight 1/30, ...).
cfg = RunConfig({
    "name": "quickstart",
    "task": {"world": {"n_blocks": 2}, "n_demos": 200},
    "model": {"kind": "hybrid",
              "denoiser": {"layers": 2, "heads": 4, "emb_dim": 64, "attn_dropout": 0.1}},
    "training": {"steps": args.steps, "checkpoint_every": args.steps // 4, "seeds": [0]},
    "paths": {"root": args.root},
})
print("dataset:", ensure_dataset(cfg))

# %%
# Training resumes from the newest checkpoint, so rerunning is cheap.
def show(step, report):
    print(f"step {step:5d}  " + "  ".join(f"{k} {v:.4f}" for k, v in report.floats().items()))


ckpts = train(cfg, seed=0, progress=show)
print("checkpoints:", [p.name for p in ckpts])

# %%
# Sample one plan pair for a fresh start and run the continuous half.
planner, payload = load_eval_planner(ckpts[-1])
policy = PlannerPolicy(planner, payload["dataset"]["header"])
perm, state, obs = episode_start(cfg.task, eval_seed=7, index=0)
ep = Episode(0, perm, state, obs, SeedTree(7).derive("plan").torch())
actions, tokens = policy([ep])
ok, ops = grammar_check(tokens[0], policy.vocab)
print("start permutation:", perm)
print("symbolic plan:", " | ".join(map(str, ops)) if ok else "ungrammatical")
final = rollout(state, actions[0], cfg.task.world)
print("reward after executing the continuous plan:", reward(final, cfg.task.world))

# %%
# Success rate of the last checkpoint over 20 evaluation episodes.
m = evaluate([ckpts[-1]], cfg.task, episodes=20, eval_seed=1234)
print(f"success {m.success_rate:.2f}  grammar validity {m.grammar_validity_rate:.2f}")
print("episode records cached under", Path(ckpts[-1]).parent.parent / "metrics")

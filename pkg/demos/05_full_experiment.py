"""The whole pipeline, end to end, on a two-patient synthetic dataset.

Equivalent to running the CLI stages in order:

    szgan synth      --config <cfg>     # write recordings + annotations
    szgan preprocess --config <cfg>     # fill the spectrogram caches
    szgan train      --config <cfg>     # adversarial trunk + per-fold heads
    szgan evaluate   --config <cfg>     # fold AUCs, ROC, alarm replay
    szgan report     --config <cfg>     # cross-scenario summary table

but driven through the library so the intermediate objects can be printed.
Uses a deliberately small experiment (2 h per patient, 4 adversarial
steps) so it finishes in well under a minute.  Every stage is keyed by a
manifest: run the script twice and the second pass reuses everything.

Run:  python3 demos/05_full_experiment.py
"""

import time
from pathlib import Path

from szgan import (
    ClassifierConfig,
    ExperimentConfig,
    GanTrainConfig,
    LabelPolicy,
    PatientSpec,
    SynthSpec,
    cmd_evaluate,
    cmd_preprocess,
    cmd_report,
    cmd_synth,
    cmd_train,
    save_config,
)

ROOT = Path(__file__).resolve().parent.parent / "runs" / "demo" / "full"


def build_config() -> ExperimentConfig:
    policy = LabelPolicy(sop_min=10.0, sph_min=2.0, interictal_gap_h=0.5,
                         lead_merge_min=10.0, min_lead_seizures=3,
                         min_interictal_h=0.25)
    patients = (
        PatientSpec(patient_id="d01", line_freq=60.0, synth=SynthSpec(
            n_channels=2, duration_s=7200.0,
            seizures=((3000.0, 3030.0), (4500.0, 4530.0), (6000.0, 6030.0)),
            channel_amplitudes=(1.0, 0.9), onset_lead_s=760.0)),
        PatientSpec(patient_id="d02", line_freq=50.0, synth=SynthSpec(
            n_channels=2, duration_s=7200.0,
            seizures=((3100.0, 3135.0), (4600.0, 4620.0), (6100.0, 6140.0)),
            channel_amplitudes=(0.8, 1.1), preictal_band=(16.0, 22.0),
            onset_lead_s=760.0)),
    )
    return ExperimentConfig(
        dataset_root=str(ROOT / "data"),
        output_dir=str(ROOT / "out"),
        patients=patients,
        gan=GanTrainConfig(batch_size=8, steps=4, seed=0),
        classifier=ClassifierConfig(max_epochs=2, patience=2),
        policy=policy,
        scenario="gan_cnn",
        oversample_factor=2,
        repeats=1,
        seed=11,
        stride_s=28.0,
    )


def main() -> None:
    cfg = build_config()
    save_config(cfg, ROOT / "experiment.json")
    print(f"experiment root: {ROOT}")

    t0 = time.perf_counter()
    paths = cmd_synth(cfg)
    print(f"[synth]      {len(paths)} files "
          f"({time.perf_counter() - t0:.1f} s)")

    t0 = time.perf_counter()
    indexes = cmd_preprocess(cfg)
    print(f"[preprocess] caches for {sorted(indexes)} "
          f"({time.perf_counter() - t0:.1f} s)")

    t0 = time.perf_counter()
    summary = cmd_train(cfg)
    print(f"[train]      refreshed={summary['refreshed']} "
          f"patients={summary['patients']} "
          f"({time.perf_counter() - t0:.1f} s)")

    t0 = time.perf_counter()
    reports = cmd_evaluate(cfg)
    print(f"[evaluate]   ({time.perf_counter() - t0:.1f} s)")
    for pid in sorted(reports):
        r = reports[pid]
        far = "n/a" if r.false_alarm_rate_per_h is None \
            else f"{r.false_alarm_rate_per_h:.2f}/h"
        print(f"  {pid}: AUC {r.auc_mean:.3f} +/- {r.auc_std:.3f} over "
              f"{len(r.fold_aucs)} folds; sensitivity {r.sensitivity}; "
              f"false alarms {far}")

    print("[report]")
    print(cmd_report(cfg))

    t0 = time.perf_counter()
    again = cmd_train(cfg)
    print(f"second train pass: refreshed={again['refreshed']} "
          f"({time.perf_counter() - t0:.2f} s — manifests skip the work)")


if __name__ == "__main__":
    main()

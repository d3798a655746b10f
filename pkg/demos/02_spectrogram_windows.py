"""From raw samples to labeled 28-second spectrogram windows.

Every 28-s slice of a recording becomes channels x 56 x 112: a short-time
Fourier transform with a 1-s cosine window and 50% overlap gives 56 time
frames of 129 one-sided magnitude bins, then a mains-frequency mask drops
the DC bin, both line-noise harmonics, and the top two bins, leaving
exactly 112 frequencies.  Windows are labeled preictal, interictal, or
excluded according to the clinical policy (SOP/SPH periods, buffer hours
around seizures).

Run:  python3 demos/02_spectrogram_windows.py
"""

from collections import Counter

from szgan import (
    LabelPolicy,
    StftConfig,
    SyntheticProfile,
    build_bin_mask,
    extract_windows,
    generate_synthetic,
    stft,
    window_to_spectrogram,
)


def main() -> None:
    profile = SyntheticProfile(line_freq=60.0, onset_lead_s=300.0, seed=7)
    rec, ann = generate_synthetic(profile, duration_s=3600.0, n_channels=2,
                                  seizure_times=[(2400.0, 2440.0)],
                                  patient_id="demo02")
    cfg = StftConfig(line_freq=60.0)

    frames = stft(rec.samples[0][: 28 * rec.sample_rate], cfg)
    print(f"raw STFT of one 28-s channel: {frames.shape} complex "
          f"(frames x one-sided bins)")

    mask = build_bin_mask(60.0)
    dropped = sorted(set(range(129)) - set(mask.kept))
    print(f"60 Hz mask keeps {len(mask.kept)} bins; drops {dropped}")

    spec = window_to_spectrogram(rec, 0.0, cfg, mask=mask)
    print(f"one preprocessed window: {spec.shape} "
          f"(channels x time frames x kept bins)")

    policy = LabelPolicy(sop_min=10.0, sph_min=2.0, interictal_gap_h=0.25,
                         lead_merge_min=10.0, min_lead_seizures=1,
                         min_interictal_h=0.1)
    windows = extract_windows(rec, ann, policy, stride_s=28.0, cfg=cfg,
                              mask=mask)
    counts = Counter(w.label for w in windows)
    print(f"labeled windows at 28-s stride over {rec.duration_s:.0f} s: "
          f"{dict(sorted(counts.items()))}")

    pre = [w for w in windows if w.label == "preictal"]
    print(f"preictal windows span [{pre[0].window_start_s:.0f}, "
          f"{pre[-1].window_start_s + 28:.0f}) s; onset is at 2400 s and the "
          f"policy ends the preictal period SPH = 2 min before it")

    unlabeled = extract_windows(rec, None, None, stride_s=14.0, cfg=cfg,
                                mask=mask)
    print(f"unlabeled extraction at half stride (for adversarial "
          f"pretraining): {len(unlabeled)} windows")


if __name__ == "__main__":
    main()

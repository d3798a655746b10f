"""Learn features from unlabeled windows with an adversarial pair.

A generator maps 100-dim uniform noise through a dense layer to 64 x 7 x 14,
then three stride-2 transposed convolutions up to n x 56 x 112.  A mirrored
discriminator learns to tell real windows from generated ones.  Neither
network ever sees a label.  After training, the discriminator minus its
final logit layer — the "trunk" — is exported as a frozen feature
extractor producing 6272-dim codes.

This demo trains for a token number of steps on a small synthetic
recording, just enough to watch the mechanics move.

Run:  python3 demos/03_adversarial_features.py
"""

import numpy as np

from szgan import (
    DiscriminatorConfig,
    GanTrainConfig,
    GeneratorConfig,
    StftConfig,
    SyntheticProfile,
    build_bin_mask,
    build_discriminator,
    build_generator,
    export_feature_extractor,
    extract_windows,
    generate_synthetic,
    train_gan,
)


def main() -> None:
    profile = SyntheticProfile(line_freq=60.0, onset_lead_s=60.0, seed=3)
    rec, _ = generate_synthetic(profile, duration_s=1200.0, n_channels=2,
                                seizure_times=(), patient_id="demo03")
    windows = extract_windows(rec, None, None, stride_s=28.0,
                              cfg=StftConfig(line_freq=60.0),
                              mask=build_bin_mask(60.0))
    print(f"{len(windows)} unlabeled windows of shape {windows[0].shape}")

    g = build_generator(GeneratorConfig(), n_channels=2, seed=1)
    d = build_discriminator(DiscriminatorConfig(), n_channels=2, seed=2)
    print(f"generator:     {g.input_shape} -> {g.output_shape}")
    print(f"discriminator: {d.input_shape} -> {d.output_shape}")

    cfg = GanTrainConfig(batch_size=8, steps=6, lr=2e-4, beta1=0.5, seed=11)
    _, _, log = train_gan(windows, g, d, cfg)
    for i, (dl, gl, pr, pf) in enumerate(zip(log.d_loss, log.g_loss,
                                             log.d_real_mean,
                                             log.d_fake_mean)):
        print(f"step {i}: d_loss {dl:.3f}  g_loss {gl:.3f}  "
              f"D(real) {pr:.2f}  D(fake) {pf:.2f}")

    trunk = export_feature_extractor(d)
    print(f"exported trunk: {trunk.input_shape} -> {trunk.output_shape}, "
          f"trainable={trunk.trainable}")

    codes = np.stack([trunk.forward((w.data - w.data.mean()) / w.data.std())
                      for w in windows[:4]])
    print(f"feature codes for 4 windows: shape {codes.shape}, "
          f"finite={bool(np.all(np.isfinite(codes)))}")

    fake = g.forward(np.random.default_rng(0).uniform(-1, 1, size=(1, 100)))
    print(f"a generated window has shape {fake.shape[1:]} with values in "
          f"[{fake.min():.2f}, {fake.max():.2f}] (tanh range)")


if __name__ == "__main__":
    main()

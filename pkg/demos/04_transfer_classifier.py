"""Train the small transfer head on frozen adversarial features.

The classifier is two fully-connected layers (256 units, then 2 softmax
outputs) with dropout 0.5 before each, trained with cross-entropy on
labeled windows pushed through the frozen trunk.  Per class, the
chronologically latest 25% of windows form a monitor split used for early
stopping; the weights that scored best on the monitor split are what you
get back.  The trunk itself never changes — compare its parameter digest
before and after.

Run:  python3 demos/04_transfer_classifier.py
"""

from szgan import (
    ClassifierConfig,
    DiscriminatorConfig,
    GanTrainConfig,
    LabelPolicy,
    StftConfig,
    SyntheticProfile,
    build_bin_mask,
    build_discriminator,
    build_generator,
    export_feature_extractor,
    extract_windows,
    generate_synthetic,
    GeneratorConfig,
    predict_batch,
    roc_auc,
    train_classifier,
    train_gan,
)


def main() -> None:
    profile = SyntheticProfile(line_freq=60.0, onset_lead_s=600.0,
                               preictal_gain=3.0, seed=9)
    rec, ann = generate_synthetic(profile, duration_s=3600.0, n_channels=2,
                                  seizure_times=[(2700.0, 2740.0)],
                                  patient_id="demo04")
    stft_cfg = StftConfig(line_freq=60.0)
    mask = build_bin_mask(60.0)

    policy = LabelPolicy(sop_min=10.0, sph_min=2.0, interictal_gap_h=0.25,
                         lead_merge_min=10.0, min_lead_seizures=1,
                         min_interictal_h=0.1)
    labeled = [w for w in extract_windows(rec, ann, policy, 28.0,
                                          cfg=stft_cfg, mask=mask)
               if w.label in ("preictal", "interictal")]
    unlabeled = extract_windows(rec, None, None, 28.0, cfg=stft_cfg, mask=mask)
    n_pre = sum(w.label == "preictal" for w in labeled)
    print(f"{len(unlabeled)} unlabeled windows for pretraining; "
          f"{len(labeled)} labeled ({n_pre} preictal) for the head")

    g = build_generator(GeneratorConfig(), 2, seed=1)
    d = build_discriminator(DiscriminatorConfig(), 2, seed=2)
    train_gan(unlabeled, g, d, GanTrainConfig(batch_size=8, steps=10, seed=5))
    trunk = export_feature_extractor(d)
    digest_before = trunk.params.byte_digest()

    cfg = ClassifierConfig(max_epochs=8, patience=3, batch_size=16, seed=4)
    head, log = train_classifier(trunk, labeled, cfg)
    print(f"trained {len(log.train_loss)} epochs "
          f"(best monitor loss at epoch {log.best_epoch}, "
          f"early stop: {log.stopped_early})")
    for e, (tr, mo) in enumerate(zip(log.train_loss, log.monitor_loss)):
        print(f"epoch {e}: train loss {tr:.4f}  monitor loss {mo:.4f}")

    print(f"trunk digest unchanged by head training: "
          f"{trunk.params.byte_digest() == digest_before}")

    scores = predict_batch(trunk, head, labeled)
    auc, _ = roc_auc(list(zip(scores.tolist(),
                              [w.label for w in labeled])))
    print(f"window-level AUC on the training recording: {auc:.3f} "
          f"(optimistic — same data the head saw; the real harness "
          f"cross-validates)")


if __name__ == "__main__":
    main()

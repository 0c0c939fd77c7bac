"""Print the complexity table for the shipped network configurations.

Counts are per 1280x720 frame, one MAC per multiply-add in every
convolution, with MMP-Net included whenever MMAM consumes its output.

    python demos/complexity_budget.py
"""

from dataclasses import replace

from mmpdeblur.config import load_config
from mmpdeblur.mmpnet import mmpnet_macs, mmpnet_param_count
from mmpdeblur.mmprnn import NetConfig, rnn_macs, rnn_param_count
from mmpdeblur.trainer import ablation_variants, effective_net_config


def row(name, gmacs, params):
    print(f"{name:<34}{gmacs:>10.2f}{params / 1e6:>10.2f}")


def main():
    cfg = load_config()
    mmp = cfg.mmpnet
    print(f"{'model':<34}{'GMACs':>10}{'Param(M)':>10}")
    row("MMP-Net", mmpnet_macs(mmp), mmpnet_param_count(mmp))
    for tag in ("A3B4C16F5", "A9B10C18F8"):
        net = NetConfig.from_tag(tag)
        row(f"MMP-RNN {tag}", rnn_macs(net, mmpnet_config=mmp), rnn_param_count(net, mmp))

    print("\nablation variants at A9B10C18")
    big = replace(cfg, net=NetConfig.from_tag("A9B10C18F8"))
    seen = set()
    for v in ablation_variants(big):
        net = effective_net_config(v.config)
        key = (net.mmam, net.ndf)
        if key in seen:
            continue
        seen.add(key)
        row(v.tag, rnn_macs(net, mmpnet_config=mmp), rnn_param_count(net, mmp))


if __name__ == "__main__":
    main()
